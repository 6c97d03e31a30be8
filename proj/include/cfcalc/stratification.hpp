#pragma once

#include <set>
#include <string>
#include <vector>

#include "cfcalc/complex.hpp"

namespace cfcalc {

struct Stratum {
    std::string label;
    int dimension = 0;
    std::vector<SimplexId> members;
};

/// Partition of a complex's open simplices into strata satisfying the
/// frontier condition.
///
/// A stratum of dimension d may contain simplices of dimension <= d (an open
/// arc contains its interior vertices) and must contain at least one
/// d-simplex. The closure of a stratum is the stratum plus whole strata of
/// strictly smaller dimension, which makes every skeleton face-closed.
class Stratification {
public:
    Stratification(SimplicialComplex ambient, std::vector<Stratum> strata)
        : ambient_(std::move(ambient)), strata_(std::move(strata)), block_of_(ambient_.size(), npos) {
        validate();
    }

    /// Every open simplex is its own stratum.
    static Stratification by_simplices(const SimplicialComplex& k) {
        std::vector<Stratum> strata;
        for (SimplexId i = 0; i < k.size(); ++i)
            strata.push_back({k.simplex(i).to_string(), k.dim(i), {i}});
        return Stratification(k, std::move(strata));
    }

    /// A single stratum holding everything (X must be nonempty).
    static Stratification trivial(const SimplicialComplex& k, const std::string& label = "X") {
        std::vector<SimplexId> all(k.size());
        std::iota(all.begin(), all.end(), 0);
        return Stratification(k, {{label, k.dimension(), std::move(all)}});
    }

    const SimplicialComplex& ambient() const noexcept { return ambient_; }
    const std::vector<Stratum>& strata() const noexcept { return strata_; }
    const Stratum& stratum_of(SimplexId id) const { return strata_[block_of_.at(id)]; }
    std::size_t stratum_index(SimplexId id) const { return block_of_.at(id); }

    SimplexSet stratum_set(std::size_t index) const {
        return SimplexSet::of_ids(ambient_, strata_.at(index).members);
    }

    /// Union of the strata of dimension <= k.
    SimplexSet skeleton(int k) const {
        std::vector<char> in(ambient_.size(), 0);
        for (const auto& st : strata_)
            if (st.dimension <= k)
                for (SimplexId id : st.members) in[id] = 1;
        return SimplexSet(ambient_, std::move(in));
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void fail(const std::string& why) const { throw Error(ErrorCode::ValidationError, "stratification: " + why); }

    void validate() {
        std::set<std::string> labels;
        for (std::size_t b = 0; b < strata_.size(); ++b) {
            auto& st = strata_[b];
            if (!labels.insert(st.label).second) fail("duplicate stratum label '" + st.label + "'");
            if (st.members.empty()) fail("stratum '" + st.label + "' is empty");
            std::sort(st.members.begin(), st.members.end());
            bool reaches_dimension = false;
            for (SimplexId id : st.members) {
                if (id >= ambient_.size()) fail("simplex id out of range");
                if (block_of_[id] != npos)
                    fail("simplex " + ambient_.simplex(id).to_string() + " lies in two strata");
                block_of_[id] = b;
                if (ambient_.dim(id) > st.dimension)
                    fail("stratum '" + st.label + "' declared dimension " + std::to_string(st.dimension) +
                         " contains " + ambient_.simplex(id).to_string());
                reaches_dimension = reaches_dimension || ambient_.dim(id) == st.dimension;
            }
            if (!reaches_dimension)
                fail("stratum '" + st.label + "' has no simplex of its declared dimension");
        }
        for (SimplexId i = 0; i < ambient_.size(); ++i)
            if (block_of_[i] == npos) fail("simplex " + ambient_.simplex(i).to_string() + " is in no stratum");

        // frontier condition
        for (std::size_t b = 0; b < strata_.size(); ++b) {
            const auto& st = strata_[b];
            std::set<std::size_t> touched;
            std::set<SimplexId> closure_members;
            for (SimplexId id : st.members)
                for (SimplexId f : ambient_.faces(id)) {
                    closure_members.insert(f);
                    if (block_of_[f] != b) touched.insert(block_of_[f]);
                }
            for (std::size_t other : touched) {
                const auto& ot = strata_[other];
                if (ot.dimension >= st.dimension)
                    fail("frontier of '" + st.label + "' meets '" + ot.label + "' of dimension " +
                         std::to_string(ot.dimension));
                for (SimplexId id : ot.members)
                    if (!closure_members.count(id))
                        fail("frontier of '" + st.label + "' contains only part of '" + ot.label + "'");
            }
        }
    }

    SimplicialComplex ambient_;
    std::vector<Stratum> strata_;
    std::vector<std::size_t> block_of_;
};

} // namespace cfcalc
