#pragma once

#include <string>
#include <vector>

namespace modr {

struct CheckItem {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckItem> items;
    bool partial = false;  // exhaustive subset window replaced by the cheap approximation

    bool ok() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& it : items)
            if (!it.ok) out.push_back(it.name + ": " + it.detail);
        return out;
    }

    void add(std::string name, bool ok, std::string detail = "") {
        items.push_back({std::move(name), ok, std::move(detail)});
    }
};

}  // namespace modr
