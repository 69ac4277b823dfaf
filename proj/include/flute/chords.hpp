#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flute::chords {

/// The four boundary arcs of the marked disk, in cyclic order; A and C are
/// the opposite pair.
enum class Arc : int { A = 0, B = 1, C = 2, D = 3 };

/// Chord endpoint on the circle: an arc and a position strictly inside it.
struct Endpoint {
  Arc arc = Arc::A;
  double pos = 0.5;  // in (0, 1), measured along the arc
};

/// Finite family of pairwise non-crossing chords of the disk, endpoints on
/// the four open arcs.  Closed curves are counted but inert: in the disk
/// model a closed curve never obstructs boundary-to-boundary connectivity.
struct ChordConfig {
  std::vector<Endpoint> endpoints;
  std::vector<std::pair<int, int>> chords;  // indices into endpoints
  int closed_curves = 0;

  /// Position in [0,4): arc index plus the in-arc position.
  double global_pos(int endpoint) const;
  int chord_count() const { return static_cast<int>(chords.size()); }

  /// Throws std::invalid_argument on duplicate/marked-point endpoints,
  /// unmatched endpoints, or crossing chords.
  void validate() const;
};

/// Boundary intervals (in global coordinates, end may wrap past 4) of one
/// complementary face.
struct FaceWitness {
  std::vector<std::pair<double, double>> intervals;
};

struct PathQuery {
  bool connected = false;
  FaceWitness witness;
};

/// Whether some complementary face of the chords touches both open arcs,
/// i.e. a path between them avoiding every chord exists.  The witness lists
/// the boundary intervals of the connecting face.
PathQuery path_exists(const ChordConfig& config, Arc from, Arc to);

/// Number of complementary faces (chords + 1 for a valid config).
int face_count(const ChordConfig& config);

struct ConnectivityVerdict {
  bool ok = false;
  bool precondition_failed = false;  // a chord joins B and D
  FaceWitness witness;
};

/// Checks the guaranteed A <-> C connection for configs with no B-D chord.
/// A failure with the precondition satisfied indicates a bug, not an
/// expected outcome.
ConnectivityVerdict verify_opposite_connectivity(const ChordConfig& config);

/// True when both chords have all endpoints in a single common arc and
/// their endpoints interleave there.  Different arcs or identical chords
/// throw std::domain_error.
bool overlap(const ChordConfig& config, int chord1, int chord2);

/// Seedable uniform non-crossing configuration: matching drawn uniformly
/// over non-crossing matchings of 2n points, positions uniform on the
/// circle (away from the marked points).
ChordConfig random_config(int n_chords, std::uint64_t seed, int closed_curves = 0);

/// One-line text encoding:
///   pts=a0.25,b0.4,...;chords=0-3,1-2;closed=0
/// Endpoints are listed in cyclic order; chords reference their indices.
std::string encode(const ChordConfig& config);
ChordConfig decode(const std::string& line);

} // namespace flute::chords
