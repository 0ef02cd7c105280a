#pragma once

// Truncated noncommutative generating series of iterated integrals. A path
// is transported through the ODE dF = F * sum_l X_l w_l by multiplying, for
// each quadrature step, the degree-3 truncation of exp(sum_l c_l X_l) with
// c_l the exact branch-continuous increment of form l over that step. Word
// coefficients are then the depth <= 3 Chen integrals (per-step error
// O(h^3), global O(h^2)).

#include "parsym/cpath.hpp"

#include <array>
#include <optional>
#include <vector>

namespace parsym {

struct Letter {
    LogForm form;
    // Optional (k, factor) tag: k in {1,2,3} names the function the letter
    // belongs to, factor identifies the divisor component. Factor ids are
    // ranked by their numeric order when projections weigh words.
    int k = 0;        // 0 = untagged
    int factor = -1;  // -1 = untagged
};

struct Alphabet {
    std::vector<Letter> letters;
    bool fully_tagged() const;
};

class NCSeries3 {
  public:
    explicit NCSeries3(int nletters);

    int nletters() const { return L_; }
    Cx coeff() const { return deg0_; }
    Cx coeff(int i) const { return deg1_[i]; }
    Cx coeff(int i, int j) const { return deg2_[i * L_ + j]; }
    Cx coeff(int i, int j, int k) const { return deg3_[(i * L_ + j) * L_ + k]; }

    // Right-multiply by exp(sum_l c_l X_l) truncated at degree 3.
    void multiply_exp(const std::vector<Cx>& c);

    // Right-multiply by another series (degree-3 truncated product).
    void multiply(const NCSeries3& o);

    void set_coeff(int i, Cx v) { deg1_[i] = v; }
    void set_coeff(int i, int j, Cx v) { deg2_[i * L_ + j] = v; }
    void set_coeff(int i, int j, int k, Cx v) { deg3_[(i * L_ + j) * L_ + k] = v; }

  private:
    int L_;
    Cx deg0_;
    std::vector<Cx> deg1_, deg2_, deg3_;
};

NCSeries3 transport(const Alphabet& alphabet, const PathWord& path, const StepControl& ctl = {});

// The single word coefficient for the listed forms in order (up to 3);
// duplicate forms are given distinct letters internally.
Cx iterated_integral(const std::vector<LogForm>& forms, const PathWord& path,
                     const StepControl& ctl = {});

// max over words of length <= 3 of |coeff(F_{g1 g2}) - coeff(F_{g1} * F_{g2})|.
double check_composition(const Alphabet& alphabet, const PathWord& g1, const PathWord& g2,
                         const StepControl& ctl = {});

struct CommutatorResiduals {
    double part_a = 0.0;  // max |int_{[a,b]} w|
    double part_b = 0.0;  // depth-2 formula residual
    double part_c = 0.0;  // depth-3 six-term formula residual
};

// Residuals of the commutator-loop identities for closed loops alpha, beta
// with a common base point: integrals of 1-forms vanish, the depth-2
// coefficient is the antisymmetrized product, and the depth-3 coefficient
// is the six-term combination of lower-depth integrals.
CommutatorResiduals check_commutator(const LogForm& w1, const LogForm& w2, const LogForm& w3,
                                     const PathWord& alpha, const PathWord& beta,
                                     const StepControl& ctl = {});

// Sum of coefficients of words whose function tags read 1,2,3 in order.
Cx project_A(const NCSeries3& series, const Alphabet& alphabet);

// Signed sum over words whose function tags form {1,2,3}: a word with
// positional factor ids (i1,i2,i3) counts 0 when i1 == i3 (split or equal
// factors) and otherwise carries the inversion parity of (i1,i2,i3).
// Normalized so that one word with ascending factors counts +1.
Cx project_B(const NCSeries3& series, const Alphabet& alphabet);

}  // namespace parsym
