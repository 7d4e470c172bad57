// Itemized pass/fail record for identity checks.
#pragma once

#include <string>
#include <vector>

namespace hecke {

struct Report {
    bool ok = true;
    std::vector<std::string> failures;
    int checked = 0;
    void expect(bool cond, const std::string& what) {
        ++checked;
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
    void merge(const Report& o) {
        ok = ok && o.ok;
        checked += o.checked;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

}  // namespace hecke
