#pragma once

#include <string>
#include <vector>

namespace wreathrep {

struct CheckReport {
    struct Item {
        std::string name;
        bool pass = false;
        double residual = 0.0;
        std::string detail;
    };
    std::vector<Item> items;

    void add(std::string name, bool pass, double residual = 0.0, std::string detail = {}) {
        items.push_back({std::move(name), pass, residual, std::move(detail)});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return it.name + (it.detail.empty() ? "" : ": " + it.detail);
        return {};
    }
};

}  // namespace wreathrep
