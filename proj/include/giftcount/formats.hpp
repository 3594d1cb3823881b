#pragma once

// Output formats for sequences: OEIS b-file ("<index> <value>\n" lines,
// consecutive indices, no header, no trailing blank line), CSV with an
// "n,value" header, and plain value-per-line.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "giftcount/errors.hpp"
#include "giftcount/integers.hpp"

namespace giftcount {

enum class OutputFormat { bfile, csv, plain };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "bfile") return OutputFormat::bfile;
    if (name == "csv") return OutputFormat::csv;
    if (name == "plain") return OutputFormat::plain;
    throw precondition_error("unknown output format: " + name);
}

inline void write_sequence(std::ostream& os, const std::vector<Natural>& values,
                           OutputFormat format, long long offset = 0) {
    switch (format) {
        case OutputFormat::bfile:
            for (std::size_t i = 0; i < values.size(); ++i)
                os << (offset + static_cast<long long>(i)) << ' ' << values[i] << '\n';
            break;
        case OutputFormat::csv:
            os << "n,value\n";
            for (std::size_t i = 0; i < values.size(); ++i)
                os << (offset + static_cast<long long>(i)) << ',' << values[i] << '\n';
            break;
        case OutputFormat::plain:
            for (const Natural& v : values) os << v << '\n';
            break;
    }
}

struct BFile {
    long long offset = 0;
    std::vector<Natural> values;
};

// Strict parse of the b-file format emitted above.
inline BFile parse_bfile(std::istream& is) {
    BFile b;
    std::string line;
    bool first = true;
    long long expect = 0;
    while (std::getline(is, line)) {
        if (line.empty()) throw precondition_error("b-file: blank line");
        std::istringstream ls(line);
        long long index;
        std::string value;
        if (!(ls >> index >> value) || !ls.eof())
            throw precondition_error("b-file: malformed line: " + line);
        if (first) {
            b.offset = index;
            expect = index;
            first = false;
        }
        if (index != expect)
            throw precondition_error("b-file: nonconsecutive index " + std::to_string(index));
        ++expect;
        b.values.push_back(Natural(Int(value)));
    }
    return b;
}

} // namespace giftcount
