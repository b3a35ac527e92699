#pragma once

// Formal-character engine: weight multiplicities by Freudenthal's recursion,
// highest-weight peeling, tensor and exterior powers, and restriction along the
// maximal-torus embeddings K_M -> K. It shares no code path with the closed-form
// branching laws and serves as their independent oracle.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "branchkit/virtual_char.hpp"
#include "branchkit/weights.hpp"

namespace branchkit {

using Weight = std::vector<int>;

enum class FactorKind { Torus, TypeA, A1, TypeD };

// One simple (or abelian) factor. TypeA rank k carries U(k) labels in Z^k
// nonincreasing; A1 labels are nonnegative integers with root 2; TypeD rank k
// labels lie in Z^k_{++}. TypeA/TypeD of rank <= 1 have no roots.
struct Factor {
    FactorKind kind;
    int rank;
    auto operator<=>(const Factor&) const = default;
};

struct ReductiveShape {
    std::vector<Factor> factors;

    int rank() const noexcept;
    auto operator<=>(const ReductiveShape&) const = default;
};

ReductiveShape k_shape(const GroupFamily& f);
ReductiveShape km_shape(const GroupFamily& f);

using Multiplicities = std::map<Weight, std::int64_t>;

struct FormalCharacter {
    ReductiveShape shape;
    Multiplicities mult;         // weight -> multiplicity
    bool dominant_only = true;   // only dominant weights stored when set
};

bool is_dominant(const ReductiveShape& shape, const Weight& w);
Weight dominant_representative(const ReductiveShape& shape, const Weight& w);

// Exact multiplicities of the dominant weights of the irreducible of the given
// highest weight. Memoized; safe to call concurrently.
std::shared_ptr<const Multiplicities> weight_multiplicities(const ReductiveShape& shape,
                                                            const Weight& highest);

// Every weight (full Weyl orbits) with its multiplicity.
std::vector<std::pair<Weight, std::int64_t>> full_weights(const ReductiveShape& shape,
                                                          const Weight& highest);

// Weyl dimension formula.
Integer weyl_dimension(const ReductiveShape& shape, const Weight& highest);

FormalCharacter irreducible_character(const ReductiveShape& shape, const Weight& highest,
                                      bool dominant_only = true);

// Peels highest weights off a genuine character; throws not_a_character_error
// when a multiplicity would go negative.
Multiplicities decompose_character(const FormalCharacter& c);
// Same peeling for virtual characters (signed result).
std::map<Weight, Integer> decompose_virtual(const ReductiveShape& shape,
                                            const std::map<Weight, Integer>& dominant_part);

Multiplicities tensor_decompose(const ReductiveShape& shape, const Weight& a, const Weight& b);
// Empty result when j exceeds the dimension.
Multiplicities exterior_decompose(const ReductiveShape& shape, const Weight& a, int j);

// ---- K_M / K level wrappers ----

Integer km_dimension(const KMLabel& label);
Integer k_dimension(const KWeight& w);
Integer dimension(const VirtualChar& vc);

// K_M-weight of a K-torus weight under the family's torus embedding.
Weight restrict_weight(const GroupFamily& f, const Weight& k_weight);

// Restrict all weights of pi_w to t_M and peel into K_M-irreducibles.
VirtualChar oracle_restrict(const KWeight& w);

VirtualChar tensor_labels(const KMLabel& a, const KMLabel& b);
VirtualChar tensor_chars(const VirtualChar& a, const VirtualChar& b);
VirtualChar exterior_label(const KMLabel& a, int j);

}  // namespace branchkit
