#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qflie/rational.hpp"

namespace qflie {

// Named rational parameter values (one namespace per closed-form display or
// TP variant; names follow the source tables: a1, b4, g6, ...).
struct ParameterAssignment {
    std::map<std::string, Rat> values;

    const Rat& at(const std::string& name) const {
        auto it = values.find(name);
        if (it == values.end()) throw std::invalid_argument("missing parameter \"" + name + "\"");
        return it->second;
    }

    bool has(const std::string& name) const { return values.count(name) != 0; }

    friend bool operator==(const ParameterAssignment&, const ParameterAssignment&) = default;
};

}  // namespace qflie
