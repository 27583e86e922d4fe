#include "wavelet_landau/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wavelet_landau::io {

std::string g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string g15(cd v) { return g15(v.real()) + " " + g15(v.imag()); }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

FilterBank read_filter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read filter file: " + path);
  std::map<int, cd> taps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    int n = 0;
    double re = 0.0, im = 0.0;
    if (!(row >> n >> re))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'n re im'");
    row >> im;  // optional
    if (!taps.emplace(n, cd{re, im}).second)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": duplicate index " + std::to_string(n));
  }
  if (taps.empty()) throw std::runtime_error(path + ": no coefficients");
  const int n_min = taps.begin()->first;
  const int n_max = taps.rbegin()->first;
  std::vector<cd> coeffs(static_cast<std::size_t>(n_max - n_min) + 1,
                         cd{0.0, 0.0});
  for (const auto& [n, v] : taps) coeffs[n - n_min] = v;
  return make_filter(n_min, coeffs, std::filesystem::path(path).stem().string());
}

void write_filter_file(const std::string& path, const FilterBank& fb) {
  std::ofstream out = open_out(path);
  out << "# filter " << fb.name << "\n";
  for (int n = fb.n_min; n <= fb.n_max(); ++n)
    out << n << " " << g15(fb.h(n)) << "\n";
}

void write_extracted_filter(const std::string& path, const ExtractedFilter& ef) {
  std::ofstream out = open_out(path);
  out << "# extracted at k " << g15(ef.k) << "\n";
  for (int n = ef.n_min; n <= ef.n_max(); ++n)
    out << n << " " << g15(ef.h(n)) << "\n";
}

void write_kq_grid(const std::string& path, const KqFunction& h) {
  std::ofstream out = open_out(path);
  out << "# a " << g15(h.a) << " N_k " << h.n_k << " N_q " << h.n_q << "\n";
  for (int ik = 0; ik < h.n_k; ++ik)
    for (int iq = 0; iq < h.n_q; ++iq)
      out << g15(h.k_at(ik)) << " " << g15(h.q_at(iq)) << " "
          << g15(h.at(ik, iq)) << "\n";
}

void write_wavefunction_grid(const std::string& path,
                             const std::vector<WaveSample>& samples) {
  std::ofstream out = open_out(path);
  out << "# x y re im abs\n";
  for (const auto& s : samples)
    out << g15(s.x) << " " << g15(s.y) << " " << g15(s.value) << " "
        << g15(std::abs(s.value)) << "\n";
}

void write_overlap_report(const std::string& path, const OverlapReport& rep) {
  std::ofstream out = open_out(path);
  out << "# sublattice stride M " << rep.M << "\n";
  out << "# m n re im dev\n";
  for (const auto& [mn, s] : rep.entries) {
    const double target = (mn.first == 0 && mn.second == 0) ? 1.0 : 0.0;
    out << mn.first << " " << mn.second << " " << g15(s) << " "
        << g15(std::abs(s - target)) << "\n";
  }
  out << "# max_dev " << g15(rep.max_dev) << "\n";
}

void write_comparison_table(const std::string& path, const ComparisonTable& tab) {
  std::ofstream out = open_out(path);
  out << "# x y absClosed absQuad absAsym relErr\n";
  for (const auto& r : tab.rows)
    out << g15(r.x) << " " << g15(r.y) << " " << g15(r.abs_closed) << " "
        << g15(r.abs_quad) << " " << g15(r.abs_asym) << " " << g15(r.rel_err)
        << "\n";
  out << "# max_rel_err " << g15(tab.max_rel_err) << "\n";
}

}  // namespace wavelet_landau::io
