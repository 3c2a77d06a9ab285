#include "hopf/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hopf {

void Report::add(const std::string &check, const std::string &index, bool pass,
                 const std::string &witness) {
    entries_.push_back({check, index, pass, pass ? std::string() : witness});
    if (!pass) ++fails_;
}

void Report::merge(const Report &other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    fails_ += other.fails_;
}

bool Report::has_failure(const std::string &check) const {
    for (const auto &e : entries_)
        if (!e.pass && e.check == check) return true;
    return false;
}

namespace {

// Numeric comparison of "[a,b,c]" index tuples so [2] sorts before [10].
std::vector<long> parse_index(const std::string &s) {
    std::vector<long> out;
    long cur = 0;
    bool in_num = false, neg = false;
    for (char c : s) {
        if (c == '-') {
            neg = true;
        } else if (c >= '0' && c <= '9') {
            cur = cur * 10 + (c - '0');
            in_num = true;
        } else if (in_num) {
            out.push_back(neg ? -cur : cur);
            cur = 0;
            in_num = false;
            neg = false;
        }
    }
    if (in_num) out.push_back(neg ? -cur : cur);
    return out;
}

bool entry_less(const ReportEntry &a, const ReportEntry &b) {
    if (a.check != b.check) return a.check < b.check;
    auto ia = parse_index(a.index), ib = parse_index(b.index);
    if (ia != ib) return ia < ib;
    return a.index < b.index;
}

}  // namespace

std::vector<ReportEntry> Report::sorted() const {
    std::vector<ReportEntry> out = entries_;
    std::stable_sort(out.begin(), out.end(), entry_less);
    return out;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto &e : sorted()) {
        os << (e.pass ? "pass" : "FAIL") << "  " << e.check << " " << e.index;
        if (!e.pass && !e.witness.empty()) os << "  -- " << e.witness;
        os << "\n";
    }
    os << (clean() ? "clean" : "FAILED") << ": " << total() - failures() << "/"
       << total() << " checks passed\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["total"] = total();
    j["failures"] = failures();
    j["clean"] = clean();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto &e : sorted()) {
        nlohmann::ordered_json je;
        je["check"] = e.check;
        je["index"] = e.index;
        je["pass"] = e.pass;
        if (!e.pass) je["witness"] = e.witness;
        j["checks"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string idx(std::initializer_list<long> parts) {
    std::string s = "[";
    bool first = true;
    for (long p : parts) {
        if (!first) s += ",";
        s += std::to_string(p);
        first = false;
    }
    return s + "]";
}

}  // namespace hopf
