#include "indep/lattice.hpp"

#include <charconv>

#include "indep/error.hpp"

namespace indep {

GroundSet::GroundSet(unsigned size) : size_(size) {
  if (size > kMaxGroundSize) {
    throw UsageError("ground set size " + std::to_string(size) + " exceeds the cap of " +
                     std::to_string(kMaxGroundSize));
  }
}

Subset::Subset(GroundSet ground, Mask bits) : ground_(ground), bits_(bits) {
  if (!ground.contains(bits)) {
    throw UsageError("subset code " + std::to_string(bits) + " outside ground set of size " +
                     std::to_string(ground.size()));
  }
}

Subset Subset::singleton(GroundSet g, unsigned element) {
  if (element >= g.size()) {
    throw UsageError("element " + std::to_string(element) + " outside ground set");
  }
  return Subset(g, Mask{1} << element);
}

Subset Subset::of(GroundSet g, std::initializer_list<unsigned> elements) {
  Mask bits = 0;
  for (unsigned e : elements) bits |= singleton(g, e).bits();
  return Subset(g, bits);
}

std::vector<unsigned> Subset::elements() const {
  std::vector<unsigned> out;
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)));
  return out;
}

void Subset::require_same_ground(const Subset& other) const {
  if (ground_ != other.ground_) {
    throw UsageError("set operation on subsets of different ground sets (" +
                     std::to_string(ground_.size()) + " vs " +
                     std::to_string(other.ground_.size()) + ")");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_ground(other);
  return is_submask(bits_, other.bits_);
}

Subset Subset::operator|(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_, bits_ | other.bits_);
}

Subset Subset::operator&(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_, bits_ & other.bits_);
}

Subset Subset::operator-(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_, bits_ & ~other.bits_);
}

std::string format_mask(Mask m) {
  std::string out = "{";
  bool first = true;
  for (; m != 0; m &= m - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(m));
    first = false;
  }
  out += '}';
  return out;
}

Subset parse_subset(GroundSet g, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError(std::string(text), "unbalanced braces in subset '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  Mask bits = 0;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(std::string(token), "bad element '" + std::string(token) + "' in subset");
    }
    if (value >= g.size()) {
      throw ParseError(std::string(token), "element " + std::string(token) +
                                               " outside ground set of size " +
                                               std::to_string(g.size()));
    }
    bits |= Mask{1} << value;
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw ParseError(std::string(text), "trailing comma in subset");
  }
  return Subset(g, bits);
}

}  // namespace indep
