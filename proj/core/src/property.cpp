#include "scorpion/property.hpp"

#include "scorpion/errors.hpp"
#include "scorpion/recognition.hpp"

namespace scorpion {

namespace {

void check_ell(int ell, const char* who) {
  if (ell < 1) throw parameter_error(std::string(who) + ": ell must be >= 1");
}

}  // namespace

PropertySpec PropertySpec::sink() {
  PropertySpec spec;
  spec.base_name_ = "sink";
  spec.name_ = spec.base_name_;
  spec.directed_ = true;
  spec.directed_fn_ = [](const DirectedGraph& h) { return find_sink(h).has_value(); };
  return spec;
}

PropertySpec PropertySpec::scorpion(int ell) {
  check_ell(ell, "PropertySpec::scorpion");
  PropertySpec spec;
  spec.base_name_ = "scorpion(" + std::to_string(ell) + ")";
  spec.name_ = spec.base_name_;
  spec.undirected_fn_ = [ell](const UndirectedGraph& h) { return is_scorpion(h, ell); };
  return spec;
}

PropertySpec PropertySpec::skeleton(int ell) {
  check_ell(ell, "PropertySpec::skeleton");
  PropertySpec spec;
  spec.base_name_ = "skeleton(" + std::to_string(ell) + ")";
  spec.name_ = spec.base_name_;
  spec.undirected_fn_ = [ell](const UndirectedGraph& h) { return is_skeleton(h, ell); };
  return spec;
}

PropertySpec PropertySpec::fossil(int ell) {
  check_ell(ell, "PropertySpec::fossil");
  PropertySpec spec;
  spec.base_name_ = "fossil(" + std::to_string(ell) + ")";
  spec.name_ = spec.base_name_;
  spec.undirected_fn_ = [ell](const UndirectedGraph& h) { return is_fossil(h, ell); };
  return spec;
}

PropertySpec PropertySpec::custom(std::string name,
                                  std::function<bool(const UndirectedGraph&)> predicate) {
  if (!predicate) throw parameter_error("PropertySpec::custom: empty predicate");
  PropertySpec spec;
  spec.base_name_ = std::move(name);
  spec.name_ = spec.base_name_;
  spec.undirected_fn_ = std::move(predicate);
  return spec;
}

PropertySpec PropertySpec::negated() const {
  PropertySpec spec = *this;
  spec.negate_ = !spec.negate_;
  spec.name_ = spec.negate_ ? "not(" + spec.base_name_ + ")" : spec.base_name_;
  return spec;
}

bool PropertySpec::evaluate(const UndirectedGraph& h) const {
  if (directed_)
    throw parameter_error("PropertySpec: '" + name_ + "' applies to directed graphs");
  return undirected_fn_(h) != negate_;
}

bool PropertySpec::evaluate(const DirectedGraph& h) const {
  if (!directed_)
    throw parameter_error("PropertySpec: '" + name_ + "' applies to undirected graphs");
  return directed_fn_(h) != negate_;
}

}  // namespace scorpion
