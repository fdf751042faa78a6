#pragma once

#include <map>
#include <string>
#include <vector>

#include "tiletrot/lattice.hpp"
#include "tiletrot/tiling.hpp"

namespace tiletrot {

enum class ModelKind { hubbard, extended_hubbard, ppp };

const char* to_string(ModelKind m);
ModelKind model_kind_from_string(const std::string& s);

struct ModelParams {
  ModelKind model = ModelKind::hubbard;
  double tau = 1.0;
  double U = 4.0;
  double V = 0.0;
  std::vector<double> v_table;  // ppp only, indexed by graph distance

  void validate() const;
};

struct TrotterErrorBreakdown {
  double w_so2 = 0.0;
  double w_h = 0.0;
  double w_tile = 0.0;
  std::map<std::string, double> components;
};

// Component keys used in TrotterErrorBreakdown::components.
inline constexpr const char* kCompChC = "[[H_C,H_h],H_C]";
inline constexpr const char* kCompIhh = "[[H_I,H_h],H_h]";
inline constexpr const char* kCompVhh = "[[H_V,H_h],H_h]";
inline constexpr const char* kCompRnorm = "schatten1(R)";

// How [[H_I,H_h],H_h] is bounded for the extended model.
//  sitewise:   (U/2) sum_i (||[T_i,H_h]|| + 2||T_i||^2), equal to (12+sqrt6)U tau^2 N on the honeycomb
//  constant14: 14 U tau^2 N
enum class IhhBound { sitewise, constant14 };

// How [[H_V,H_h],H_h] is bounded.
//  evaluated:     VkN(...) with the four star norms computed on the lattice
//  closed_form_k3: 3V tau^2 N (16 + 2 sqrt3), the honeycomb closed form
//  automatic:     closed_form_k3 on periodic_hex, evaluated otherwise
enum class VhhBound { automatic, evaluated, closed_form_k3 };

struct ExtendedBoundOptions {
  IhhBound ihh = IhhBound::sitewise;
  VhhBound vhh = VhhBound::automatic;
};

// Individual commutator bounds, all two-sector operator norms.
double bound_chc(const LatticeGraph& g, const ModelParams& p, int k);
double bound_ihh_sitewise(const LatticeGraph& g, const ModelParams& p);
double bound_ihh_fragment(const LatticeGraph& g, const ModelParams& p);
double bound_vhh_evaluated(const LatticeGraph& g, const ModelParams& p, int k);
double bound_vhh_closed_form_k3(const ModelParams& p, int n_sites);

TrotterErrorBreakdown w_so2_hubbard(const LatticeGraph& g, const ModelParams& p);
TrotterErrorBreakdown w_so2_extended(const LatticeGraph& g, const ModelParams& p, int k,
                                     const ExtendedBoundOptions& opt = {});

// Three-section W_h in the (blue, red, gold) order of the cover.
double w_h_three_sections(const SectionCover& cover, double tau, int n_sites);

// Any number of sections; nested sums bounded term by term.
double w_h_general(const SectionCover& cover, double tau, int n_sites);

TrotterErrorBreakdown w_tile(const LatticeGraph& g, const SectionCover& cover, const ModelParams& p,
                             const ExtendedBoundOptions& opt = {});

}  // namespace tiletrot
