#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rpt {

// Zero-bend orthogonal representation. rot[v] is clockwise; angle[v][i] is the
// corner swept clockwise from rot[v][i] to rot[v][i+1], in quarter turns.
struct OrthoRep {
  int n = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> rot;
  std::vector<std::vector<int>> angle;
  std::vector<std::array<long long, 2>> coords;
  // Dart (ext_edge, leaving ext_from) has the external face on its right.
  int ext_edge = -1, ext_from = -1;

  int other(int e, int v) const { return edges[e][0] == v ? edges[e][1] : edges[e][0]; }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int pos(int v, int e) const;
  int& corner_after(int v, int e) { return angle[v][pos(v, e)]; }
  int corner_after(int v, int e) const { return angle[v][pos(v, e)]; }
  bool has_coords() const { return !coords.empty(); }
};

struct Dart {
  int e, from;
};

struct FaceInfo {
  std::vector<std::vector<Dart>> walks;  // face on the right of each dart
  std::vector<int> turn_sum;
  std::vector<int> face_of_dart;  // 2*e + (from == edges[e][0] ? 0 : 1)
  int external = -1;
};

inline int dart_id(const OrthoRep& r, int e, int from) { return 2 * e + (r.edges[e][0] == from ? 0 : 1); }

FaceInfo trace_faces(const OrthoRep& r);
// Next dart along the face on the right.
Dart next_dart(const OrthoRep& r, Dart d);
// Corner at d's head inside the face right of d.
int corner_at_head(const OrthoRep& r, Dart d);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
};

ValidationReport validate_rep(const OrthoRep& r);

// Doubled spirality of the component given by edge mask with poles u, v.
// Edges at a pole outside the mask act as alias attachments.
int measure_spirality(const OrthoRep& r, const std::vector<char>& comp, int u, int v, uint64_t path_seed = 0);

// Clockwise turn sum (2 - corner) from e_in to e_out at vertex w.
int turn_at(const OrthoRep& r, int w, int e_in, int e_out);

std::vector<std::array<long long, 2>> compact(const OrthoRep& r);
std::string to_svg(const OrthoRep& r);
std::string to_json(const OrthoRep& r);
OrthoRep rep_from_json(const std::string& text);
bool operator==(const OrthoRep& a, const OrthoRep& b);

}  // namespace rpt
