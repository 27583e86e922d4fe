#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "wavelet_landau/closed_form.hpp"
#include "wavelet_landau/constants.hpp"
#include "wavelet_landau/filter_bank.hpp"
#include "wavelet_landau/inverse_map.hpp"
#include "wavelet_landau/landau.hpp"
#include "wavelet_landau/zak.hpp"

namespace wavelet_landau::io {

// All numeric output carries 15 significant digits; identical inputs
// byte-reproduce identical files.
std::string g15(double v);
std::string g15(cd v);  // "re im"

// Opens for writing, throwing std::runtime_error on failure.
std::ofstream open_out(const std::string& path);

// Filter text format: comment/blank lines ignored, data lines "n re im"
// (the imaginary column is optional; missing indices inside the span are zero).
FilterBank read_filter_file(const std::string& path);
void write_filter_file(const std::string& path, const FilterBank& fb);

// Same data format with a header recording the extraction parameter k.
void write_extracted_filter(const std::string& path, const ExtractedFilter& ef);

// Header "# a <a> N_k <n> N_q <n>", rows "k q re im".
void write_kq_grid(const std::string& path, const KqFunction& h);

struct WaveSample {
  double x = 0.0, y = 0.0;
  cd value{0.0, 0.0};
};
// Rows "x y re im abs".
void write_wavefunction_grid(const std::string& path,
                             const std::vector<WaveSample>& samples);

// Rows "m n re im dev" with dev = |S - delta_{m,0} delta_{n,0}|; n is the
// sublattice index (the physical translate is (m, M n)).
void write_overlap_report(const std::string& path, const OverlapReport& rep);

// Rows "x y absClosed absQuad absAsym relErr".
void write_comparison_table(const std::string& path, const ComparisonTable& tab);

}  // namespace wavelet_landau::io
