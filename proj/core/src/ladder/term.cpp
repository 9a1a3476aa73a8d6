#include <cctype>

#include "fixfactor/errors.hpp"
#include "fixfactor/ladder/space.hpp"

namespace fixfactor::ladder {

std::string LadderTerm::format() const {
  std::string out = base == Base::strand ? "strand" : "ramp";
  for (unsigned i = 0; i < cat_depth; ++i) out = "cat(" + out + ")";
  return out;
}

LadderTerm parse_term(std::string_view text, unsigned nesting_cap) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::string_view rest = compact;
  unsigned depth = 0;
  while (rest.substr(0, 4) == "cat(") {
    rest.remove_prefix(4);
    ++depth;
  }
  LadderTerm term;
  term.cat_depth = depth;
  if (rest.substr(0, 6) == "strand") {
    term.base = Base::strand;
    rest.remove_prefix(6);
  } else if (rest.substr(0, 4) == "ramp") {
    term.base = Base::ramp;
    rest.remove_prefix(4);
  } else {
    throw Error(ErrorCode::term, "'" + std::string(text) + "': expected strand, ramp or cat(...)");
  }
  if (rest != std::string(depth, ')')) {
    throw Error(ErrorCode::term, "'" + std::string(text) + "': unbalanced or trailing characters");
  }
  if (depth > nesting_cap) {
    throw Error(ErrorCode::depth,
                "cat nesting " + std::to_string(depth) + " exceeds the cap " + std::to_string(nesting_cap));
  }
  return term;
}

}  // namespace fixfactor::ladder
