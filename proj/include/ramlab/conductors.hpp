#ifndef RAMLAB_CONDUCTORS_HPP
#define RAMLAB_CONDUCTORS_HPP

#include "ramlab/filtration.hpp"

namespace ramlab {

// A representation of the datum's Galois group, known only through its
// fixed-space dimension on each subgroup; that is all Swan/Artin need.
class GroupRepresentation {
public:
    enum class Kind { abelian_character, permutation, regular, direct_sum };

    // chi(sigma) = exp(2 pi i values[sigma] / modulus); homomorphism checked.
    static GroupRepresentation character(const GroupView& view, std::vector<long long> values,
                                         long long modulus);
    static GroupRepresentation trivial_character(const GroupView& view);
    // images[sigma] is the permutation of {0..N-1} attached to sigma;
    // compatibility with the composition table is checked.
    static GroupRepresentation permutation(const GroupView& view,
                                           std::vector<std::vector<int>> images);
    static GroupRepresentation regular(const GroupView& view);
    static GroupRepresentation direct_sum(std::vector<GroupRepresentation> parts);

    Kind kind() const { return kind_; }
    long long dim() const { return dim_; }
    const std::vector<long long>& character_values() const { return values_; }
    long long character_modulus() const { return modulus_; }

    // dim V^H for a subgroup mask H.
    long long fixed_dim(const GroupView& view, uint64_t subgroup_mask) const;

    std::string describe() const;

private:
    GroupRepresentation() = default;

    Kind kind_ = Kind::regular;
    long long dim_ = 1;
    int group_size_ = 1;
    std::vector<long long> values_;           // character
    long long modulus_ = 1;                   // character
    std::vector<std::vector<int>> images_;    // permutation
    std::vector<GroupRepresentation> parts_;  // direct sum
};

struct ConductorReport {
    Rational swan;    // integral (asserted)
    long long epsilon = 0;
    Rational artin;   // epsilon + swan
};

// Sw(V) = sum over positive upper breaks lambda of
//   lambda * (dim V^{G^{lambda+}} - dim V^{G^lambda});
// the result is asserted to be a nonnegative integer.
Rational swan_conductor(const UpperFiltration& u, const GroupRepresentation& rep);

// epsilon(V) = dim V - dim V^{G^0};  Ar = epsilon + Sw.
ConductorReport artin_conductor(const UpperFiltration& u, const GroupRepresentation& rep);

struct SwanBoundReport {
    Rational swan;
    Rational dim_times_lambda;
    bool ok = false;
};

// Requires the filtration bounded by lambda; asserts Sw(V) <= dim(V) * lambda.
SwanBoundReport check_swan_dim_bound(const UpperFiltration& u, const GroupRepresentation& rep,
                                     const Rational& lambda);

// All |G| characters of an abelian group (DomainError otherwise), each with
// modulus |G|.  Deterministic order: sorted by value vector.
std::vector<GroupRepresentation> character_group(const GroupView& view);

} // namespace ramlab

#endif
