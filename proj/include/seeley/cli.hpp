#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seeley/batch.hpp"
#include "seeley/halfline.hpp"

namespace seeley {

// One extension run as described by the command line: which domain to extend
// over, which stock function feeds it, the operator frame, the sample grid
// and where the samples go. The frame carries k; for the ball and the disk
// it is the radial frame.
struct RunConfig {
  std::string domain = "halfline";  // halfline | quadrant | ball | disk-polar
  std::string function = "exp_cos";
  int dim = 2;             // coordinates of the function, t included
  OperatorConfig frame;
  GridSpec grid;           // one axis per sampled coordinate
  std::vector<double> at;  // halfline only: fixed space point, dim - 1 entries
  int jets = 0;            // halfline only: time derivatives written per row
  std::string out = "-";   // CSV destination, "-" for stdout
  std::string meta;        // metadata path, defaults to out + ".meta.json"
  std::uint64_t seed = 0;

  // Throws std::invalid_argument when the pieces do not fit together.
  void validate() const;
};

// Parses "lo:hi:count".
GridAxis parse_grid_axis(const std::string& text);

// Command line driver. Artifacts are only written after the whole run has
// been validated and evaluated, so a failing run leaves no files behind.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace seeley
