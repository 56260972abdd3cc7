#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invar {

// One line per check. Suites built in parallel fill pre-sized vectors by
// index, so the emitted order never depends on scheduling.
struct CheckLine {
    std::string key;
    bool pass = false;
    std::string detail; // shown on FAIL, and for informational annotations
};

class Report {
public:
    void add(std::string key, bool pass, std::string detail = "") {
        lines_.push_back({std::move(key), pass, std::move(detail)});
    }
    void merge(const Report& other) {
        lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
    }
    const std::vector<CheckLine>& lines() const { return lines_; }
    bool all_pass() const {
        for (const auto& l : lines_)
            if (!l.pass) return false;
        return true;
    }
    size_t failed_count() const {
        size_t n = 0;
        for (const auto& l : lines_)
            if (!l.pass) ++n;
        return n;
    }
    void print(std::ostream& os) const {
        for (const auto& l : lines_) {
            os << (l.pass ? "PASS " : "FAIL ") << l.key;
            if (!l.detail.empty()) os << " " << l.detail;
            os << "\n";
        }
    }

private:
    std::vector<CheckLine> lines_;
};

} // namespace invar
