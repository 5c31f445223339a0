#pragma once

#include <functional>
#include <memory>
#include <string>

#include "scorpion/graph.hpp"

namespace scorpion {

/// A decidable graph property used to filter induced subgraphs. A spec
/// applies to exactly one graph kind; evaluating it on the other kind
/// throws parameter_error. Negation flips the verdict but keeps the kind.
class PropertySpec {
public:
  /// Directed: some vertex has an edge from every other vertex.
  static PropertySpec sink();

  /// Undirected: the graph is a scorpion with tail length ell.
  static PropertySpec scorpion(int ell);

  /// Undirected: scorpion with tail length ell and independent legs.
  static PropertySpec skeleton(int ell);

  /// Undirected: scorpion skeleton plus extra edges, each with at least
  /// one endpoint outside the witnessing legs.
  static PropertySpec fossil(int ell);

  /// Arbitrary undirected predicate.
  static PropertySpec custom(std::string name,
                             std::function<bool(const UndirectedGraph&)> predicate);

  /// Same property with the verdict flipped.
  PropertySpec negated() const;

  bool applies_to_directed() const { return directed_; }
  const std::string& name() const { return name_; }

  bool evaluate(const UndirectedGraph& h) const;
  bool evaluate(const DirectedGraph& h) const;

private:
  PropertySpec() = default;

  std::string base_name_;
  std::string name_;
  bool directed_ = false;
  bool negate_ = false;
  std::function<bool(const UndirectedGraph&)> undirected_fn_;
  std::function<bool(const DirectedGraph&)> directed_fn_;
};

}  // namespace scorpion
