#pragma once

#include <iosfwd>
#include <string>

#include "cglab/verify.hpp"

namespace cglab {

enum class ReportFormat { jsonl, csv, tty };
ReportFormat parse_report_format(const std::string& s);

/// Streams reports one at a time; csv writes its header before the first row.
class ReportWriter {
public:
    ReportWriter(std::ostream& os, ReportFormat format);

    void write(const CheckReport& r);
    std::size_t count(Verdict v) const { return counts_[static_cast<std::size_t>(v)]; }
    std::size_t total() const { return written_; }

private:
    std::ostream& os_;
    ReportFormat format_;
    std::size_t written_ = 0;
    std::size_t counts_[4] = {0, 0, 0, 0};
};

/// A single jsonl record; keys in the order check_id, params, computed,
/// expected, verdict, elapsed_ms.
std::string to_jsonl(const CheckReport& r);
std::string to_csv_row(const CheckReport& r);
std::string csv_header();
std::string to_tty(const CheckReport& r);

}  // namespace cglab
