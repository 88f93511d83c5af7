#ifndef TROPEXT_REPORT_HPP
#define TROPEXT_REPORT_HPP

#include <string>
#include <vector>

namespace tropext {

struct ReportEntry {
    std::string check;   // name of the invariant
    std::string object;  // offending/checked object id, "" for global checks
    bool pass = true;
    std::string detail;  // witness description on failure
};

struct ValidationReport {
    std::vector<ReportEntry> entries;

    void record(std::string check, std::string object, bool pass, std::string detail = "") {
        entries.push_back({std::move(check), std::move(object), pass, std::move(detail)});
    }
    bool passed() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

}  // namespace tropext

#endif
