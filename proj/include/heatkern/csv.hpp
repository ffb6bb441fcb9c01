// CSV emission with full-precision scientific notation so output is
// byte-stable and diffable.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace heatkern {

// 17 significant digits; round-trips any double exactly.
inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

class CsvWriter {
  public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header)
        : os_(os) {
        for (std::size_t i = 0; i < header.size(); ++i)
            os_ << (i ? "," : "") << header[i];
        os_ << "\n";
    }
    void row(const std::vector<double>& vals) {
        for (std::size_t i = 0; i < vals.size(); ++i)
            os_ << (i ? "," : "") << csv_num(vals[i]);
        os_ << "\n";
    }

  private:
    std::ostream& os_;
};

}  // namespace heatkern
