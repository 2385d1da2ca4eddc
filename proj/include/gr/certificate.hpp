#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gr/colored_graph.hpp"

namespace gr {

// Line-oriented certificate format, chosen for diff-ability:
//   GRC1 <n> <k>
//   <n-1 lines of whitespace-separated colors, line i holding edges (i,j), j>i>
//   # <key> <value>          (free-form metadata, order preserved)
// Entry 0 marks an absent edge; everything else must lie in [1,k].
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct CertificateError : std::runtime_error {
    long long byte_offset;
    CertificateError(const std::string& what, long long offset);
};

void write_certificate(const ColoredCompleteGraph& g, const Metadata& meta, std::ostream& out);
ColoredCompleteGraph read_certificate(std::istream& in, Metadata* meta = nullptr);

void write_certificate_file(const ColoredCompleteGraph& g, const Metadata& meta, const std::string& path);
ColoredCompleteGraph read_certificate_file(const std::string& path, Metadata* meta = nullptr);

}  // namespace gr
