#pragma once

#include <string>
#include <vector>

#include "rmac/int_matrix.hpp"
#include "rmac/polynomial.hpp"
#include "rmac/words.hpp"

namespace rmac {

// Standard k x k cycle matrix: e_i -> e_{i+1}, e_k -> e_1.
IntMatrix cycle_matrix(int k);

struct ActionMatrix {
  IntMatrix M;
  int group_order = 0;
  int dim = 0;
};

// Action of Z_{n/d} = <σ^d> on N_w for a word of length d, 1 < d < n, with gap number iota.
ActionMatrix action_matrix(int n, int d, int iota);
// (iota - 1) copies of Z[Z_n], as a block diagonal of cycle matrices.
ActionMatrix regular_module(int n, int iota);

enum class SummandKind { induced, regular };

struct Summand {
  WordClass word_class;
  SummandKind kind = SummandKind::induced;
  int copies = 1;  // iota - 1 for regular summands

  int stabilizer_order() const { return kind == SummandKind::regular ? 1 : word_class.n / word_class.d; }
  long long rank() const {
    return static_cast<long long>(word_class.iota) * word_class.n - word_class.d;
  }
  ActionMatrix action() const;
};

struct H1Decomposition {
  int n = 0;
  std::vector<Summand> summands;
  long long total_rank = 0;
};

H1Decomposition decompose_h1(int n);

// σ on Ind_{Z_{n/d}}^{Z_n}: d cyclically permuted copies, the last returning through m.
IntMatrix induced_block(const IntMatrix& m, int d);

inline constexpr long long default_charpoly_degree_cap = 200'000;
IntPolynomial predicted_charpoly(const H1Decomposition& dec, long long degree_cap = default_charpoly_degree_cap);

// "3·Ind_{Z_2}^{Z_8} Z_sign ⊕ Ind_{Z_4}^{Z_8} Z^3 ⊕ 30·Z[Z_8]"
std::string module_summary(const H1Decomposition& dec);
std::string decomposition_table(const H1Decomposition& dec);

}  // namespace rmac
