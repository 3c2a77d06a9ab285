#pragma once

#include <string>
#include <vector>

namespace hopf {

/// One verified axiom instance. `index` identifies the instance (grades, basis
/// indices) in a stable bracketed form so reports sort canonically.
struct ReportEntry {
    std::string check;    // e.g. "coassoc", "rmatrix.split-left"
    std::string index;    // e.g. "[0,1,1]"
    bool pass = true;
    std::string witness;  // human-readable mismatch detail, empty when passing
};

/// Exhaustive (not fail-fast) verification result.
class Report {
public:
    void add(const std::string &check, const std::string &index, bool pass,
             const std::string &witness = "");
    void merge(const Report &other);

    bool clean() const { return fails_ == 0; }
    std::size_t total() const { return entries_.size(); }
    std::size_t failures() const { return fails_; }

    /// Entries sorted by (check id, index tuple); canonical output order.
    std::vector<ReportEntry> sorted() const;

    const std::vector<ReportEntry> &entries() const { return entries_; }

    /// True when some entry with this check id failed.
    bool has_failure(const std::string &check) const;

    std::string to_text() const;
    std::string to_json() const;

private:
    std::vector<ReportEntry> entries_;
    std::size_t fails_ = 0;
};

/// Helper for index tuples: idx(1,2,3) -> "[1,2,3]".
std::string idx(std::initializer_list<long> parts);

}  // namespace hopf
