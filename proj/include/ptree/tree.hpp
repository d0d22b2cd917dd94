#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptree/rational.hpp"
#include "ptree/registry.hpp"

namespace ptree {

class Node;
using NodePtr = std::shared_ptr<const Node>;

// One outgoing edge of a mechanism node: the value it commits the node's
// variable to, the exact probability of taking it, and the subtree below.
struct Branch {
  ValueId value;
  Rational prob;
  NodePtr child;
};

// A tree node: either a mechanism resolving one variable over an ordered
// branch list, or a leaf. Nodes are immutable and shared freely between
// trees; every transform builds new nodes and reuses untouched subtrees.
class Node {
 public:
  static NodePtr leaf();
  static NodePtr internal(VariableId variable, std::vector<Branch> branches);

  bool is_leaf() const { return !variable_.has_value(); }
  VariableId variable() const { return *variable_; }
  std::span<const Branch> branches() const { return branches_; }

 private:
  Node() = default;
  Node(VariableId variable, std::vector<Branch> branches)
      : variable_(variable), branches_(std::move(branches)) {}

  std::optional<VariableId> variable_;
  std::vector<Branch> branches_;
};

// Replaces every leaf of `node` with `tail`. No validity checks; callers
// are responsible for variable disjointness.
NodePtr replace_leaves(const NodePtr& node, const NodePtr& tail);

// A full causal model: the variable registry plus the root mechanism
// (the sure event). Value semantics; copies share structure.
class ProbabilityTree {
 public:
  ProbabilityTree(std::shared_ptr<const VariableRegistry> registry, NodePtr root);

  const VariableRegistry& registry() const { return *registry_; }
  const std::shared_ptr<const VariableRegistry>& registry_ptr() const { return registry_; }
  const NodePtr& root() const { return root_; }

  ProbabilityTree with_root(NodePtr root) const { return {registry_, std::move(root)}; }

 private:
  std::shared_ptr<const VariableRegistry> registry_;
  NodePtr root_;
};

// A partial assignment of variables to values; the unit of observation
// and conditioning. Literals are kept sorted by variable id, at most one
// per variable.
class Event {
 public:
  Event() = default;

  // Throws OverlapError if the variable already appears.
  void set(VariableId variable, ValueId value);
  // Extended copy; same duplicate rule.
  Event with(VariableId variable, ValueId value) const;

  std::optional<ValueId> value_of(VariableId variable) const;
  bool contains(VariableId variable) const { return value_of(variable).has_value(); }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  bool disjoint_with(const Event& other) const;
  // Union of two variable-disjoint events; throws OverlapError otherwise.
  Event merged_with(const Event& other) const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

 private:
  std::vector<std::pair<VariableId, ValueId>> literals_;
};

// One invariant violation found by validate(). `where` names the branch
// path from the root to the offending node ("root" for the root itself).
struct Violation {
  std::vector<std::pair<VariableId, ValueId>> steps;
  std::string where;
  std::string message;
};

// Checks every structural invariant: per-node normalization, distinct
// in-domain branch values, complete domains (zero-probability branches
// must be explicit), and no variable resolved twice along a path.
// Violations are data, not errors; an empty list means the tree is valid.
std::vector<Violation> validate(const ProbabilityTree& tree);
bool is_valid(const ProbabilityTree& tree);

// Product of branch probabilities along a root-to-leaf path given as
// (variable, value) steps. Throws PathNotFoundError if the steps do not
// trace such a path.
Rational path_probability(const ProbabilityTree& tree,
                          std::span<const std::pair<VariableId, ValueId>> steps);

// Total probability of the paths consistent with `e`: the sum of leaf
// path-probabilities over all leaves whose path assigns every literal in
// `e`. A path that never resolves a mentioned variable does not match.
Rational event_probability(const ProbabilityTree& tree, const Event& e);

struct Leaf {
  std::vector<std::pair<VariableId, ValueId>> assignment;  // in resolution order
  Rational probability;
};

// All root-to-leaf paths in branch order with their exact probabilities.
// The brute-force substrate behind the equivalence tests.
std::vector<Leaf> enumerate_leaves(const ProbabilityTree& tree);

// Semantic equality: same variable/value names, probabilities, branch
// order and shape. Registries may differ in id numbering.
bool equal_trees(const ProbabilityTree& a, const ProbabilityTree& b);

}  // namespace ptree
