#ifndef MG_TWIST_HPP
#define MG_TWIST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mg/hn.hpp"
#include "mg/laurent.hpp"
#include "mg/quiver.hpp"

namespace mg {

// Words in the spherical twists at the simples, their inverses, and degree
// shifts. Compact grammar, whitespace-separated, vertices 1-based:
//   `T2`    twist at vertex 2
//   `T2'`   inverse twist at vertex 2
//   `S[-3]` shift by -3
// A word acts as a functor composition with the leftmost generator outermost.
enum class GenKind { Twist, InverseTwist, Shift };

struct TwistGen {
    GenKind kind = GenKind::Twist;
    int vertex = 0;  // 0-based
    int shift = 0;
};

struct TwistWord {
    std::vector<TwistGen> gens;

    bool empty() const { return gens.empty(); }
    // a single twist generator, the case with a closed-form entropy
    bool single_twist() const { return gens.size() == 1 && gens[0].kind == GenKind::Twist; }
    bool pure_shift() const;
    int total_shift() const;
};

TwistWord parse_word(const std::string& text, int vertex_count);
std::string word_to_string(const TwistWord& word);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix int_identity(int n);
IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> int_mat_apply(const IntMatrix& a, const std::vector<std::int64_t>& v);

// K-theory matrix of a twist word in the basis [S_1], ..., [S_n] (columns act
// on class vectors): twist(i) -> I - e_i (row i of chi), inverse by
// Sherman-Morrison, shift(m) -> (-1)^m I.
IntMatrix twist_k_matrix(const Quiver& quiver, int cy_n, const TwistWord& word);

// Formal sum of shifted simples: entry i holds c u^m per c copies of S_i in
// cohomological degree m. Evaluation at u = -1 recovers the K-theory class.
struct GradedClass {
    std::vector<LaurentPoly> entries;

    static GradedClass simple(const Quiver& quiver, int j);
    static GradedClass generator(const Quiver& quiver);  // all simples in degree 0

    LaurentPoly poincare() const;
    std::vector<std::int64_t> k_class() const;
    bool nonnegative() const;
};

// Cohomology of Phi_i^k S_j with its Poincare polynomial:
//   i = j:      S_i in degree k(N-1)
//   q_ij > 0:   the universal extension in degree 0, plus S_i^{q_ij} in
//               degrees l(N-1) for l = 1..k-1
//   q_ji > 0:   S_j in degree 0, plus S_i^{q_ji} in degrees (N-2)+l(N-1)
//   otherwise:  S_j in degree 0
struct TwistPowerProfile {
    CohomologyProfile profile;
    LaurentPoly poincare;
    GradedClass graded;
};

TwistPowerProfile twist_power_profile(const Quiver& quiver, int cy_n, int i, int k, int j, int p = 2);

// Rebuilds the Poincare polynomial by telescoping the one-step triangle and
// compares it with the closed form, exactly.
bool poincare_recursion_check(const Quiver& quiver, int cy_n, int i, int k, int j);

// Pushes a nonnegative graded class through the word one generator at a time
// (rightmost first), each shifted simple mapped through the exact one-step
// twist profile. The result bounds the true graded dimensions from above and
// evaluates at u = -1 to the exact K-theory class.
GradedClass word_upper_profile(const Quiver& quiver, int cy_n, const TwistWord& word,
                               const GradedClass& start);

// Poincare values of the upper profile of word^n applied to the generator
// class, n = 0..n_max, evaluated at t. Avoids exact coefficients, which grow
// exponentially along the orbit.
std::vector<double> upper_profile_series(const Quiver& quiver, int cy_n, const TwistWord& word,
                                         double t, int n_max);

}  // namespace mg

#endif
