#include "meshlap/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace meshlap {

namespace {

// Line reader that skips blanks and # comments and tracks line numbers.
class LineSource {
public:
  explicit LineSource(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::size_t start = line.find_first_not_of(" \t\r\n");
      if (start == std::string::npos || line[start] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

double parse_double(const std::string& tok, int line) {
  std::size_t used = 0;
  double value;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "trailing junk in number '" + tok + "'");
  return value;
}

long parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long value;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "trailing junk in integer '" + tok + "'");
  return value;
}

void write_coord(std::ostream& out, const Vec3& p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g", p.x, p.y, p.z);
  out << buf;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream create_or_throw(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

} // namespace

TriMesh read_off(std::istream& in) {
  LineSource src(in);
  std::string line;

  if (!src.next(line)) throw ParseError(src.line_no() + 1, "empty file, expected OFF header");
  {
    auto toks = tokens_of(line);
    if (toks.size() != 1 || toks[0] != "OFF")
      throw ParseError(src.line_no(), "expected OFF magic, got '" + line + "'");
  }

  if (!src.next(line)) throw ParseError(src.line_no() + 1, "missing counts line");
  auto counts = tokens_of(line);
  if (counts.size() != 3) throw ParseError(src.line_no(), "counts line must be 'nv nf ne'");
  long nv = parse_int(counts[0], src.line_no());
  long nf = parse_int(counts[1], src.line_no());
  if (nv < 0 || nf < 0) throw ParseError(src.line_no(), "negative counts");

  std::vector<Vec3> verts;
  verts.reserve(nv);
  for (long v = 0; v < nv; ++v) {
    if (!src.next(line)) throw ParseError(src.line_no() + 1, "file truncated inside vertex list");
    auto toks = tokens_of(line);
    if (toks.size() != 3) throw ParseError(src.line_no(), "vertex line must have 3 coordinates");
    verts.push_back({parse_double(toks[0], src.line_no()), parse_double(toks[1], src.line_no()),
                     parse_double(toks[2], src.line_no())});
  }

  std::vector<std::array<int, 3>> faces;
  faces.reserve(nf);
  for (long f = 0; f < nf; ++f) {
    if (!src.next(line)) throw ParseError(src.line_no() + 1, "file truncated inside face list");
    auto toks = tokens_of(line);
    if (toks.size() != 4 || parse_int(toks[0], src.line_no()) != 3)
      throw ParseError(src.line_no(), "only triangle faces '3 i j k' are supported");
    std::array<int, 3> tri{};
    for (int c = 0; c < 3; ++c) {
      long idx = parse_int(toks[c + 1], src.line_no());
      if (idx < 0 || idx >= nv)
        throw ParseError(src.line_no(), "vertex index " + std::to_string(idx) + " out of range");
      tri[c] = static_cast<int>(idx);
    }
    faces.push_back(tri);
  }
  return TriMesh::build(std::move(verts), std::move(faces));
}

void write_off(std::ostream& out, const TriMesh& mesh) {
  out << "OFF\n# 0-based vertex indices\n";
  out << mesh.n_vertices() << ' ' << mesh.n_triangles() << ' ' << mesh.n_edges() << '\n';
  for (const Vec3& p : mesh.vertices()) {
    write_coord(out, p);
    out << '\n';
  }
  for (const auto& f : mesh.triangles()) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

TetMesh read_node_ele(std::istream& node, std::istream& ele) {
  LineSource nsrc(node);
  std::string line;

  if (!nsrc.next(line)) throw ParseError(nsrc.line_no() + 1, "empty .node file");
  auto header = tokens_of(line);
  if (header.empty()) throw ParseError(nsrc.line_no(), "bad .node header");
  long nv = parse_int(header[0], nsrc.line_no());
  if (header.size() >= 2 && parse_int(header[1], nsrc.line_no()) != 3)
    throw ParseError(nsrc.line_no(), ".node dimension must be 3");

  std::vector<Vec3> verts(nv);
  long base = 0;
  for (long v = 0; v < nv; ++v) {
    if (!nsrc.next(line)) throw ParseError(nsrc.line_no() + 1, ".node file truncated");
    auto toks = tokens_of(line);
    if (toks.size() < 4) throw ParseError(nsrc.line_no(), "node line must be 'index x y z'");
    long idx = parse_int(toks[0], nsrc.line_no());
    if (v == 0) {
      if (idx != 0 && idx != 1) throw ParseError(nsrc.line_no(), "node indices must start at 0 or 1");
      base = idx;
    }
    if (idx - base != v)
      throw ParseError(nsrc.line_no(), "node indices must be consecutive, expected " +
                                           std::to_string(v + base));
    verts[v] = {parse_double(toks[1], nsrc.line_no()), parse_double(toks[2], nsrc.line_no()),
                parse_double(toks[3], nsrc.line_no())};
  }

  LineSource esrc(ele);
  if (!esrc.next(line)) throw ParseError(esrc.line_no() + 1, "empty .ele file");
  auto eheader = tokens_of(line);
  if (eheader.empty()) throw ParseError(esrc.line_no(), "bad .ele header");
  long nt = parse_int(eheader[0], esrc.line_no());
  if (eheader.size() >= 2 && parse_int(eheader[1], esrc.line_no()) != 4)
    throw ParseError(esrc.line_no(), "only linear tets (4 nodes) are supported");

  std::vector<std::array<int, 4>> tets(nt);
  for (long t = 0; t < nt; ++t) {
    if (!esrc.next(line)) throw ParseError(esrc.line_no() + 1, ".ele file truncated");
    auto toks = tokens_of(line);
    if (toks.size() < 5) throw ParseError(esrc.line_no(), "ele line must be 'index i j k l'");
    for (int c = 0; c < 4; ++c) {
      long idx = parse_int(toks[c + 1], esrc.line_no()) - base;
      if (idx < 0 || idx >= nv)
        throw ParseError(esrc.line_no(), "vertex index " + std::to_string(idx + base) + " out of range");
      tets[t][c] = static_cast<int>(idx);
    }
  }
  return TetMesh::build(std::move(verts), std::move(tets));
}

void write_node_ele(std::ostream& node, std::ostream& ele, const TetMesh& mesh) {
  node << "# 0-based node indices\n";
  node << mesh.n_vertices() << " 3 0 0\n";
  for (int v = 0; v < mesh.n_vertices(); ++v) {
    node << v << ' ';
    write_coord(node, mesh.vertex(v));
    node << '\n';
  }
  ele << "# 0-based node indices\n";
  ele << mesh.n_tets() << " 4 0\n";
  for (int t = 0; t < mesh.n_tets(); ++t) {
    const auto& tet = mesh.tet(t);
    ele << t << ' ' << tet[0] << ' ' << tet[1] << ' ' << tet[2] << ' ' << tet[3] << '\n';
  }
}

TriMesh read_off_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_off(in);
}

void write_off_file(const std::string& path, const TriMesh& mesh) {
  auto out = create_or_throw(path);
  write_off(out, mesh);
}

TetMesh read_node_ele_files(const std::string& node_path, const std::string& ele_path) {
  auto node = open_or_throw(node_path);
  auto ele = open_or_throw(ele_path);
  return read_node_ele(node, ele);
}

void write_node_ele_files(const std::string& node_path, const std::string& ele_path,
                          const TetMesh& mesh) {
  auto node = create_or_throw(node_path);
  auto ele = create_or_throw(ele_path);
  write_node_ele(node, ele, mesh);
}

} // namespace meshlap
