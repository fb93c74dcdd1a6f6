// Graded subspaces, sub- and quotient objects, induced maps, and degreewise
// exactness tests. Everything the bar/tau functors and the diagram checks
// are assembled from.

#ifndef GYSIN_SUBQUOTIENT_HPP
#define GYSIN_SUBQUOTIENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "gysin/gf2.hpp"
#include "gysin/graded.hpp"

namespace gysin {

class GradedSubspace {
public:
    GradedSubspace() = default;
    explicit GradedSubspace(const GradedSpace& ambient);
    explicit GradedSubspace(std::vector<std::size_t> ambient_dims);

    int degree_bound() const noexcept { return static_cast<int>(parts_.size()); }
    std::size_t ambient_dim(int degree) const noexcept;
    std::size_t dim(int degree) const noexcept;
    std::size_t total_dim() const noexcept;
    const gf2::Subspace& part(int degree) const;
    bool insert(int degree, const gf2::BitVec& v);
    bool contains(int degree, const gf2::BitVec& v) const;
    bool contains(const GradedSubspace& other) const;

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) { return a.parts_ == b.parts_; }

private:
    std::vector<gf2::Subspace> parts_;
    gf2::Subspace empty_;
};

GradedSubspace image(const GradedMap& f);
GradedSubspace kernel(const GradedMap& f);
GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
// f(S) for a subspace S of f's source.
GradedSubspace image_of(const GradedMap& f, const GradedSubspace& s);
// f^{-1}(T) for a subspace T of f's target.
GradedSubspace preimage(const GradedMap& f, const GradedSubspace& t);

// A subspace realized as a space of its own, with its inclusion. Basis
// vectors are the rref rows of each degree part.
struct SubObject {
    GradedSpace space;
    GradedMap inclusion;
    GradedSubspace sub;

    // Coordinates of an ambient vector in the sub basis; nullopt if outside.
    std::optional<gf2::BitVec> coords(int degree, const gf2::BitVec& ambient) const;
};

// A quotient with its projection and the section sending each quotient basis
// vector to the matching unit vector of the complement columns.
struct QuotientObject {
    GradedSpace space;
    GradedMap projection;
    GradedMap section;
    GradedSubspace sub;
};

SubObject make_sub(const GradedSpace& ambient, const GradedSubspace& sub, const std::string& label = {});
QuotientObject make_quotient(const GradedSpace& ambient, const GradedSubspace& sub);

// Corestriction/restriction of f to subobjects of its source and target.
// Returns nullopt if f does not carry src.sub into tgt.sub.
std::optional<GradedMap> restrict_map(const GradedMap& f, const SubObject& src, const SubObject& tgt);
// Map induced on quotients. Returns nullopt if f(src.sub) is not inside tgt.sub.
std::optional<GradedMap> induced_map(const GradedMap& f, const QuotientObject& src, const QuotientObject& tgt);

// Degreewise exactness of X --f--> Y --g--> Z at Y^degree.
bool exact_at(const GradedMap& f, const GradedMap& g, int degree);
bool injective_at(const GradedMap& f, int degree);
bool surjective_at(const GradedMap& f, int degree);
// Degrees (of the middle object) where exactness fails.
std::vector<int> exactness_failures(const GradedMap& f, const GradedMap& g);
std::vector<int> injectivity_failures(const GradedMap& f);
std::vector<int> surjectivity_failures(const GradedMap& f);
// Source degrees where g∘f and h∘k differ (both paths must have equal shift).
std::vector<int> commutativity_failures(const GradedMap& g, const GradedMap& f, const GradedMap& h,
                                        const GradedMap& k);

}  // namespace gysin

#endif  // GYSIN_SUBQUOTIENT_HPP
