#include "invar/varset.hpp"

#include "invar/rational.hpp"

#include <set>

namespace invar {

VarSetPtr VariableSet::make(std::vector<std::string> names, std::optional<size_t> block_split) {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        throw Error("variable names must be distinct");
    if (block_split && *block_split > names.size())
        throw Error("block split out of range");
    auto vs = std::make_shared<VariableSet>();
    vs->names_ = std::move(names);
    vs->block_split_ = block_split;
    return vs;
}

const VarSetPtr& VariableSet::ring_r() {
    static VarSetPtr vs = make({"x", "s", "t", "u", "v"});
    return vs;
}

const VarSetPtr& VariableSet::ring_s() {
    static VarSetPtr vs = make({"x", "s", "t", "u"});
    return vs;
}

const VarSetPtr& VariableSet::ring_sy() {
    static VarSetPtr vs = make({"x", "s", "t", "u", "y1", "y2", "y3", "y4"}, 4);
    return vs;
}

const VarSetPtr& VariableSet::ring_r_alpha() {
    static VarSetPtr vs = make({"x", "s", "t", "u", "v", "alpha"});
    return vs;
}

VarSetPtr VariableSet::extended(const std::string& fresh) const {
    if (index_of(fresh))
        throw Error("variable '" + fresh + "' already present");
    auto names = names_;
    names.push_back(fresh);
    return make(std::move(names), block_split_);
}

std::optional<size_t> VariableSet::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

} // namespace invar
