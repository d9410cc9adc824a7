#pragma once

#include <cstdint>

#include "rebax/report.hpp"

namespace rebax {

// One CLI invocation's worth of configuration. Scalar-valued fields are kept
// as strings in the scalars grammar; "auto" picks the kind-appropriate value
// and "wrong" (for xi) deliberately detunes it for negative controls.
struct RunConfig {
  std::string command = "verify";
  std::string suite = "all";
  std::string rep = "gl2";
  std::string q = "2";
  std::string a = "q";  // "q" or "-1/q"
  std::string xi = "auto";
  std::string xi2 = "auto";
  std::size_t sites = 3;
  std::string left = "trivial";
  std::string right = "trivial";
  std::string ltilde = "auto";
  std::vector<std::uint64_t> seeds{1};
  std::size_t samples = 5;
  std::vector<std::string> hams;  // empty: kinds implied by the boundaries
  std::string ham = "H1";         // spectrum command
  std::string out;
  int threads = 1;
};

AChoice parse_a_choice(const std::string& text);

// Left boundary by CLI name: trivial | rational | evaluation | poly | small |
// bmw-rational | bmw2. xi_cfg: scalar | auto | wrong.
BoundarySolution build_left_boundary(const Representation& rep,
                                     const std::string& name,
                                     const std::string& xi_cfg);
// Right boundary: trivial | conjugated, with ltilde one of auto | swap |
// scalar:<value> | left(:reuse the left boundary matrix).
RightBoundary build_right_boundary(const Representation& rep,
                                   const std::string& name,
                                   const std::string& ltilde,
                                   const std::string& xi2_cfg,
                                   const BoundarySolution& left);

// A two-parameter family of non-scalar solutions of the constant reflection
// equation shared by the gl(2) and Sp_q(2) R-matrices: vanishing (1,1) entry.
Matrix nonscalar_constant_solution(const Scalar& beta, const Scalar& gamma,
                                   const Scalar& delta);

Report run_verify(const RunConfig& cfg);
Report run_chain(const RunConfig& cfg);
Report run_spectrum(const RunConfig& cfg);
Report run_command(const RunConfig& cfg);

}  // namespace rebax
