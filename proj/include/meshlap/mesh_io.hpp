#pragma once

#include "meshlap/tetmesh.hpp"
#include "meshlap/trimesh.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace meshlap {

// Parse failure with the 1-based line number of the offending input.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// ASCII OFF, triangle faces only. Writers emit 17 significant digits and
// 0-based indices (declared in a header comment).
TriMesh read_off(std::istream& in);
TriMesh read_off_file(const std::string& path);
void write_off(std::ostream& out, const TriMesh& mesh);
void write_off_file(const std::string& path, const TriMesh& mesh);

// TetGen-style .node/.ele pair. Indices may be 0- or 1-based on input
// (detected from the first record); written 0-based.
TetMesh read_node_ele(std::istream& node, std::istream& ele);
TetMesh read_node_ele_files(const std::string& node_path, const std::string& ele_path);
void write_node_ele(std::ostream& node, std::ostream& ele, const TetMesh& mesh);
void write_node_ele_files(const std::string& node_path, const std::string& ele_path,
                          const TetMesh& mesh);

} // namespace meshlap
