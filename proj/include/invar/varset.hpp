#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace invar {

class VariableSet;
using VarSetPtr = std::shared_ptr<const VariableSet>;

// An ordered set of variable names. Storage order is fixed (it is the
// order exponent vectors are laid out in); the significance order used for
// term comparison lives in MonomialOrder, not here. For block (elimination)
// constructions block_split marks the boundary: names [0, block_split) are
// the X-block, the rest the Y-block.
class VariableSet {
public:
    static VarSetPtr make(std::vector<std::string> names,
                          std::optional<size_t> block_split = std::nullopt);

    // The base ring K[x,s,t,u,v].
    static const VarSetPtr& ring_r();
    // The subring K[x,s,t,u] (v removed).
    static const VarSetPtr& ring_s();
    // K[x,s,t,u][y1..y4] with the X-block first, for elimination orders.
    static const VarSetPtr& ring_sy();
    // K[x,s,t,u,v] extended by the formal group parameter alpha.
    static const VarSetPtr& ring_r_alpha();

    // this set plus one fresh variable appended after all others.
    VarSetPtr extended(const std::string& fresh) const;

    const std::vector<std::string>& names() const { return names_; }
    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    std::optional<size_t> index_of(const std::string& name) const;
    std::optional<size_t> block_split() const { return block_split_; }

    bool same_as(const VariableSet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::optional<size_t> block_split_;
};

inline bool compatible(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || a->same_as(*b);
}

} // namespace invar
