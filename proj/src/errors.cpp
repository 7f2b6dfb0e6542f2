#include "twinless/errors.hpp"

namespace twinless {

std::string Witness::describe() const {
  using std::to_string;
  switch (kind) {
    case Kind::kUnreachedVertex:
      return "vertex " + to_string(a) + " is unreachable";
    case Kind::kTooFewVertices:
      return "only " + to_string(a) + " vertices";
    case Kind::kArticulationPoint:
      return "articulation point " + to_string(a);
    case Kind::kBridge:
      return "bridge " + to_string(a) + " " + to_string(b);
    case Kind::kNotStronglyConnected:
      return "no directed path between " + to_string(a) + " and " + to_string(b);
    case Kind::kStrongArticulationPoint:
      return "strong articulation point " + to_string(a);
    case Kind::kStrongBridge:
      return "strong bridge " + to_string(a) + " " + to_string(b);
    case Kind::kTwinPresent:
      return "edge " + to_string(a) + " " + to_string(b) + " has a twin";
  }
  return "unknown";
}

}  // namespace twinless
