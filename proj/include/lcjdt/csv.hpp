#ifndef LCJDT_CSV_HPP
#define LCJDT_CSV_HPP

// Deterministic CSV output: 17 significant digits, '.' decimal point,
// ',' separator, '#'-prefixed comment lines.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace lcjdt {

inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }

    void comment(const std::string& line) { out_ << "# " << line << "\n"; }

    void header(const std::vector<std::string>& columns) { write_line(columns); }

    void row(const std::vector<double>& values) {
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (double v : values) cells.push_back(csv_number(v));
        write_line(cells);
    }

private:
    void write_line(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << "\n";
    }

    std::ofstream out_;
};

}  // namespace lcjdt

#endif
