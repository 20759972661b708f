#pragma once

#include <string>
#include <vector>

#include "siegelkr/admissible_set.hpp"

namespace skr {

// Human/machine-readable reports behind the CLI.  All outputs are
// deterministic for a fixed configuration.

std::string word_label(const std::vector<int>& letters, int omega_power);
std::string finite_word_label(const std::vector<int>& letters);

std::string strata_table_tsv(int g, int max_g = kDefaultAdmBound);
std::string strata_table_json(int g, int max_g = kDefaultAdmBound);

std::string eo_table_tsv(int g);
std::string eo_table_json(int g);

std::string prank0_table_tsv(int g);
std::string prank0_table_json(int g);

// "A_I: <g(g+1)/2>, prank0: <floor(g^2/2)>, ssp-max: <...>, S_I: [lo,hi]"
std::string dims_line(int g);

// Rank-graded Hasse diagram; node labels carry the reduced word and the
// p-rank, superspecial nodes are drawn with a double border.
std::string poset_dot(const AdmissiblePoset& poset);

// The thirteen alcoves of Adm(mu) for g = 2, drawn in the coweight plane:
// one polygon per alcove (p-rank 0 shaded dark), a black dot at the origin
// and gray dots at the W-orbit of mu.
std::string figure_g2_svg();

}  // namespace skr
