#ifndef HOFNET_IO_HPP
#define HOFNET_IO_HPP

#include <filesystem>
#include <string>

#include "hofnet/complex.hpp"
#include "hofnet/covering.hpp"
#include "hofnet/gdd.hpp"

namespace hofnet {

/// Formats a double with 6 significant digits, "." decimal separator,
/// locale-independent ("%.6g").
std::string format_double(double v);

/// Canonical complex JSON:
/// { k, m, t, seed, nodes: [{id, role, birth}], edges: [[u,v]...], facets: [[...]...] }
/// with edges and facets sorted, so identical complexes serialize to identical
/// bytes.
std::string complex_to_json(const PureComplex& c);
void write_complex_json(const PureComplex& c, const std::filesystem::path& path);
PureComplex read_complex_json(const std::filesystem::path& path);

/// Edge list as "u<TAB>v" lines, u < v, lexicographically sorted.
void write_skeleton_tsv(const Skeleton& g, const std::filesystem::path& path);

/// CSV "l_B,mean_N_B,std_N_B,trials".
void write_boxdim_csv(const BoxCoveringResult& r, const std::filesystem::path& path);

/// CSV "k,count,probability" sorted by k.
void write_gdd_csv(const DegreeDistribution& d, const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace hofnet

#endif
