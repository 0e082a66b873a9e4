#include "seqhc/spaces/sequence_norm.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace seqhc::spaces {

SequenceNorm SequenceNorm::ell(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("l^p requires 1 <= p < inf");
  return {Kind::ellp, p, 0};
}

std::string SequenceNorm::name() const {
  switch (kind) {
    case Kind::ellp: {
      std::ostringstream os;
      os << "l" << p;
      return os.str();
    }
    case Kind::c0:
      return "c0";
    case Kind::s:
      return "s" + std::to_string(k);
  }
  return "?";
}

SequenceNorm parse_sequence_norm(const std::string& text, unsigned k) {
  if (text == "c0") return SequenceNorm::c0();
  if (text == "s") return SequenceNorm::s(k);
  if (text.size() > 1 && text[0] == 's') {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      throw std::invalid_argument("malformed s-norm '" + text + "'");
    return SequenceNorm::s(value);
  }
  if (text.size() > 1 && (text[0] == 'l' || text[0] == 'L')) {
    std::size_t used = 0;
    const double p = std::stod(text.substr(1), &used);
    if (used != text.size() - 1) throw std::invalid_argument("malformed l^p norm '" + text + "'");
    return SequenceNorm::ell(p);
  }
  throw std::invalid_argument("unknown sequence norm '" + text + "'");
}

namespace detail {

void throw_not_in_y() { throw NotInSpaceError("not in embedded Y: support leaves row 1"); }

}  // namespace detail

}  // namespace seqhc::spaces
