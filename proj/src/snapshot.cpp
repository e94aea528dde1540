#include "logse/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace logse {

static_assert(std::endian::native == std::endian::little,
              "snapshot payload is defined little-endian");
static_assert(sizeof(Complex) == 16);

namespace {

std::string join(std::span<const double> xs) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

}  // namespace

void write_snapshot(const std::string& path, const GridFunction& u,
                    const SnapshotMeta& meta) {
  const GridSpec& s = u.spec();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("snapshot: cannot open for write: " + path);

  out.precision(17);
  out << "format: logse-snapshot-1\n";
  out << "dim: " << s.dim << "\n";
  out << "lo: " << join(std::span(s.lo).first(s.dim)) << "\n";
  out << "hi: " << join(std::span(s.hi).first(s.dim)) << "\n";
  out << "cells:";
  for (int a = 0; a < s.dim; ++a) out << " " << s.cells[a];
  out << "\n";
  out << "time: " << meta.time << "\n";
  out << "scheme: " << meta.scheme << "\n";
  out << "lambda: " << meta.lambda << "\n";
  out << "tau: " << meta.tau << "\n";
  out << "\n";

  const auto v = u.values();
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(Complex)));
  if (!out) throw std::runtime_error("snapshot: write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open: " + path);

  std::map<std::string, std::string> header;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    const auto colon = line.find(": ");
    if (colon == std::string::npos)
      throw std::runtime_error("snapshot: malformed header line: " + line);
    header[line.substr(0, colon)] = line.substr(colon + 2);
  }
  auto need = [&](const std::string& key) -> const std::string& {
    const auto it = header.find(key);
    if (it == header.end())
      throw std::runtime_error("snapshot: missing header key: " + key);
    return it->second;
  };
  if (need("format") != "logse-snapshot-1")
    throw std::runtime_error("snapshot: unknown format: " + need("format"));

  const int dim = std::stoi(need("dim"));
  std::array<double, 3> lo{}, hi{};
  std::array<int, 3> cells{};
  {
    std::istringstream ls(need("lo")), hs(need("hi")), cs(need("cells"));
    for (int a = 0; a < dim; ++a)
      if (!(ls >> lo[a]) || !(hs >> hi[a]) || !(cs >> cells[a]))
        throw std::runtime_error("snapshot: malformed grid header");
  }
  const GridSpec spec =
      GridSpec::make(dim, std::span(lo).first(dim), std::span(hi).first(dim),
                     std::span(cells).first(dim));

  Snapshot snap{GridFunction(spec), {}};
  snap.meta.time = std::stod(need("time"));
  snap.meta.scheme = need("scheme");
  snap.meta.lambda = std::stod(need("lambda"));
  snap.meta.tau = std::stod(need("tau"));

  const auto v = snap.field.values();
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(v.size() * sizeof(Complex)));
  if (in.gcount() != static_cast<std::streamsize>(v.size() * sizeof(Complex)))
    throw std::runtime_error("snapshot: short payload in " + path);
  return snap;
}

}  // namespace logse
