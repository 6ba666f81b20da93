#pragma once

#include <string>
#include <vector>

#include "schur/tensor.hpp"
#include "schur/torus.hpp"
#include "schur/weights.hpp"

namespace schur::present {

using tensor::GeneratorSymbol;
using tensor::RelationInstance;
using weights::Weight;

enum class Label { char0_rational, charp_schur, charp_rational };

const char* label_name(Label label);
const char* family_name(RelationInstance::Family f);

struct Params {
  long n = 2;
  long r = 0, s = 0;  // rational labels
  long d = 0;         // polynomial label
  long p = 0, m = 0;  // characteristic-p labels
  /// Restrict the char-0 subset-product relations to |S| <= n/2.
  bool half_subsets_only = false;
};

/// A named presentation materialized as data: the generator list and every
/// relation instance with concrete indices and exponents.
struct Presentation {
  Label label{};
  Params params;
  std::vector<GeneratorSymbol> generators;
  std::vector<RelationInstance> relations;
};

/// Instantiates the full finite relation list of the chosen presentation.
/// Characteristic-p labels require d = r + (n-1)s < p^m.
Presentation build_presentation(Label label, const Params& prm);

struct VerificationReport {
  struct Item {
    std::string section;  // relation | kernel | dimension | closure | derived | locus
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  long elapsed_ms = 0;  // diagnostics only; not part of the data payload

  bool overall_pass() const;
  long failures() const;
};

/// Runs the full pipeline: every relation instance as an exact matrix
/// identity, every kernel generator's vanishing, the three-way dimension
/// agreement, the char-0 closure dimension, the derived Serre relations,
/// and (rational char-p) the kernel-range locus comparison.
VerificationReport verify_presentation(const Presentation& pres);

std::string export_presentation_json(const Presentation& pres);
std::string export_presentation_text(const Presentation& pres);

/// Locus comparison between the j-truncations of the rational char-p
/// subset kernel family: the implemented range [m, m+t] reproduces the
/// ideal's vanishing locus, while lowering the start of the range below m
/// cuts into it. Both facts are reported.
struct LocusComparison {
  bool truncated_matches_ideal = false;
  std::vector<long> shrinking_j;  // j < m whose instances shrink the locus
};

LocusComparison compare_kernel_j_ranges(const Params& prm);

/// The fixed (n,r,s) = (4,1,1) separation: lambda = (2,2,0,0) passes the
/// entry-box test but fails the corrected cut, and its shift mu =
/// (1,1,-1,-1) escapes both the weight set and the ideal locus.
struct CounterexampleReport {
  Weight lambda{2, 2, 0, 0};
  Weight mu{1, 1, -1, -1};
  bool lambda_in_pi_prime = false;
  bool lambda_in_pi_double_prime = true;
  long above_s_count = 0;   // |R+| = 2
  long above_s_sum = 0;     // 4
  long cut_bound = 0;       // r + |R+| s = 3
  unsigned long violating_mask = 0;  // S = {1,2}
  long mu_subset_sum = 0;   // 2 > r = 1
  bool mu_in_lambda_rs = true;
  bool mu_in_ideal_locus = true;
  std::string generator_text;
  std::string generator_value_at_mu;

  bool separation_holds() const;
};

CounterexampleReport counterexample_report();

}  // namespace schur::present
