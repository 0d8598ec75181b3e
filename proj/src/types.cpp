#include "osht/types.hpp"

#include "osht/errors.hpp"

namespace osht {

const char* placement_name(Placement method) {
  switch (method) {
    case Placement::elimination:
      return "elimination";
    case Placement::ascending:
      return "ascending";
  }
  throw Error("unknown placement method");
}

Placement placement_from_name(const std::string& name) {
  if (name == "elimination") return Placement::elimination;
  if (name == "ascending") return Placement::ascending;
  throw Error("unknown placement method: \"" + name +
              "\" (expected \"elimination\" or \"ascending\")");
}

}  // namespace osht
