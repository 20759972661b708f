#include "siegelkr/reports.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "siegelkr/kr_strata.hpp"
#include "siegelkr/prank0.hpp"
#include "siegelkr/weyl_finite.hpp"

namespace skr {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::ostringstream os;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) os << sep;
    os << parts[k];
  }
  return os.str();
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::ostringstream os;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) os << sep;
    os << v[k];
  }
  return os.str();
}

}  // namespace

std::string word_label(const std::vector<int>& letters, int omega_power) {
  std::ostringstream os;
  if (!letters.empty()) {
    os << 's';
    for (int i : letters) os << i;
  }
  if (omega_power != 0) {
    if (!letters.empty()) os << "·";
    os << "τ";
    if (omega_power != 1) os << '^' << omega_power;
  } else if (letters.empty()) {
    os << 'e';
  }
  return os.str();
}

std::string finite_word_label(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::ostringstream os;
  os << 's';
  for (int i : letters) os << i;
  return os.str();
}

std::string strata_table_tsv(int g, int max_g) {
  AdmissiblePoset poset = enumerate_adm(g, max_g);
  std::ostringstream os;
  os << "word\tlength\tp_rank\tsuperspecial\tsupport\tes\n";
  for (const StratumRecord& rec : stratum_records(poset)) {
    ReducedWord rw = reduced_word(rec.x);
    os << word_label(rw.letters, rw.omega_power) << '\t' << rec.dim << '\t'
       << rec.p_rank << '\t' << (rec.superspecial ? "yes" : "no") << '\t'
       << join_ints(rec.support, ",") << '\t'
       << (rec.es.empty() ? "unknown" : join(rec.es, ",")) << '\n';
  }
  return os.str();
}

std::string strata_table_json(int g, int max_g) {
  AdmissiblePoset poset = enumerate_adm(g, max_g);
  nlohmann::json rows = nlohmann::json::array();
  for (const StratumRecord& rec : stratum_records(poset)) {
    ReducedWord rw = reduced_word(rec.x);
    nlohmann::json row;
    row["word"] = rw.letters;
    row["length"] = rec.dim;
    row["p_rank"] = rec.p_rank;
    row["superspecial"] = rec.superspecial;
    row["support"] = rec.support;
    if (rec.es.empty())
      row["es"] = nullptr;
    else
      row["es"] = rec.es;
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["g"] = g;
  j["strata"] = std::move(rows);
  return j.dump(2);
}

std::string eo_table_tsv(int g) {
  std::ostringstream os;
  os << "word\tone_line\tnu\tdim\tp_rank\tsupersingular\n";
  for (const SignedPerm& w : enumerate_final(g)) {
    os << finite_word_label(finite_reduced_word(w)) << '\t' << to_string(w)
       << '\t' << '(' << join_ints(final_to_nu(w).values(), ",") << ')' << '\t'
       << eo_dimension(w) << '\t' << eo_prank(w) << '\t'
       << (eo_supersingular(w) ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string eo_table_json(int g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SignedPerm& w : enumerate_final(g)) {
    nlohmann::json row;
    row["word"] = finite_reduced_word(w);
    row["one_line"] = w.one_line();
    row["nu"] = final_to_nu(w).values();
    row["dim"] = eo_dimension(w);
    row["p_rank"] = eo_prank(w);
    row["supersingular"] = eo_supersingular(w);
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["g"] = g;
  j["eo_strata"] = std::move(rows);
  return j.dump(2);
}

std::string prank0_table_tsv(int g) {
  std::ostringstream os;
  os << "sigma\tinversions\tfix\tA\tA_inv\tlift_length\n";
  for (const SgPerm& sigma : enumerate_sg(g)) {
    os << to_string(sigma) << '\t' << inversions(sigma) << '\t'
       << fixed_point_count(sigma) << '\t' << a_statistic(sigma) << '\t'
       << a_statistic(sigma.inverse()) << '\t' << max_prank0_length(sigma)
       << '\n';
  }
  std::ostringstream head;
  head << "# dim of the p-rank 0 locus: " << dim_prank0(g) << "\n";
  return head.str() + os.str();
}

std::string prank0_table_json(int g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SgPerm& sigma : enumerate_sg(g)) {
    nlohmann::json row;
    row["sigma"] = sigma.one_line();
    row["inversions"] = inversions(sigma);
    row["fix"] = fixed_point_count(sigma);
    row["A"] = a_statistic(sigma);
    row["A_inv"] = a_statistic(sigma.inverse());
    row["lift_length"] = max_prank0_length(sigma);
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["g"] = g;
  j["dim_prank0"] = dim_prank0(g);
  j["fibers"] = std::move(rows);
  return j.dump(2);
}

std::string dims_line(int g) {
  auto [lo, hi] = supersingular_dim_bounds(g);
  std::ostringstream os;
  os << "A_I: " << g * (g + 1) / 2 << ", prank0: " << g * g / 2
     << ", ssp-max: " << max_superspecial(g).dim << ", S_I: [" << lo << ','
     << hi << "]";
  return os.str();
}

std::string poset_dot(const AdmissiblePoset& poset) {
  std::vector<StratumRecord> records = stratum_records(poset);
  std::ostringstream os;
  os << "digraph adm {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"sans-serif\"];\n";
  for (size_t k = 0; k < records.size(); ++k) {
    ReducedWord rw = reduced_word(records[k].x);
    os << "  n" << k << " [label=\"" << word_label(rw.letters, rw.omega_power)
       << "\\np-rank " << records[k].p_rank << '"';
    if (records[k].superspecial) os << ", peripheries=2, style=filled, fillcolor=gray85";
    os << "];\n";
  }
  // Grade by length so the drawing is a ranked Hasse diagram.
  int top = 0;
  for (int len : poset.lengths()) top = std::max(top, len);
  for (int len = 0; len <= top; ++len) {
    os << "  { rank=same;";
    for (size_t k = 0; k < poset.size(); ++k)
      if (poset.lengths()[k] == len) os << " n" << k << ';';
    os << " }\n";
  }
  for (const auto& [lo, hi] : poset.covers())
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

// Coweight-plane picture for g = 2.  An element t^lambda w acts on R^2 by
// p -> (lambda(1)-c/2, lambda(2)-c/2) + M(w) p, where M(w) is the signed
// 2x2 permutation matrix of w (coordinate 2g+1-i plays the role of -e_i).
// The base alcove is the triangle (0,0), (-1/2,0), (-1/2,-1/2) in the
// antidominant chamber.
struct Point {
  double x, y;
};

Point apply_g2(const AffineElement& elem, Point p) {
  const SignedPerm& w = elem.finite_part();
  const TranslationVector& lambda = elem.translation_part();
  const double c = lambda.similitude();
  std::array<double, 2> in{p.x, p.y};
  std::array<double, 2> out{lambda(1) - c / 2, lambda(2) - c / 2};
  for (int j = 1; j <= 2; ++j) {
    int target = w(j);
    if (target <= 2)
      out[static_cast<size_t>(target) - 1] += in[static_cast<size_t>(j) - 1];
    else
      out[static_cast<size_t>(4 - target)] -= in[static_cast<size_t>(j) - 1];
  }
  return {out[0], out[1]};
}

int screen_x(double a) { return static_cast<int>(std::lround(320 + 240 * a)); }
int screen_y(double b) { return static_cast<int>(std::lround(320 - 240 * b)); }

}  // namespace

std::string figure_g2_svg() {
  AdmissiblePoset poset = enumerate_adm(2);
  const std::array<Point, 3> base = {{{0, 0}, {-0.5, 0}, {-0.5, -0.5}}};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 640\" "
        "width=\"640\" height=\"640\">\n";
  for (size_t k = 0; k < poset.size(); ++k) {
    const AffineElement& x = poset.elements()[k];
    bool dark = prank(x) == 0;
    ReducedWord rw = reduced_word(x);
    os << "  <polygon class=\"alcove" << (dark ? " prank0" : "")
       << "\" points=\"";
    for (size_t v = 0; v < base.size(); ++v) {
      Point p = apply_g2(x, base[v]);
      if (v) os << ' ';
      os << screen_x(p.x) << ',' << screen_y(p.y);
    }
    os << "\" fill=\"" << (dark ? "#8a8a8a" : "#e8e8e8")
       << "\" stroke=\"#303030\" stroke-width=\"1\">";
    os << "<title>" << word_label(rw.letters, rw.omega_power) << "</title>";
    os << "</polygon>\n";
  }
  // W-orbit of mu (the translation parts of the maximal elements).
  for (const AffineElement& m : maximal_elements(2)) {
    const TranslationVector& lambda = m.translation_part();
    os << "  <circle class=\"orbit\" cx=\"" << screen_x(lambda(1) - 0.5)
       << "\" cy=\"" << screen_y(lambda(2) - 0.5)
       << "\" r=\"6\" fill=\"#a0a0a0\"/>\n";
  }
  os << "  <circle class=\"origin\" cx=\"" << screen_x(0) << "\" cy=\""
     << screen_y(0) << "\" r=\"6\" fill=\"#000000\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace skr
