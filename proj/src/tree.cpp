#include "ptree/tree.hpp"

#include <algorithm>
#include <set>

#include "ptree/errors.hpp"

namespace ptree {

NodePtr Node::leaf() {
  static const NodePtr instance(new Node());
  return instance;
}

NodePtr Node::internal(VariableId variable, std::vector<Branch> branches) {
  if (branches.empty()) throw Error("internal node requires at least one branch");
  for (const Branch& b : branches) {
    if (!b.child) throw Error("branch child must not be null");
  }
  return NodePtr(new Node(variable, std::move(branches)));
}

NodePtr replace_leaves(const NodePtr& node, const NodePtr& tail) {
  if (node->is_leaf()) return tail;
  std::vector<Branch> branches;
  branches.reserve(node->branches().size());
  for (const Branch& b : node->branches()) {
    branches.push_back({b.value, b.prob, replace_leaves(b.child, tail)});
  }
  return Node::internal(node->variable(), std::move(branches));
}

ProbabilityTree::ProbabilityTree(std::shared_ptr<const VariableRegistry> registry, NodePtr root)
    : registry_(std::move(registry)), root_(std::move(root)) {
  if (!registry_) throw Error("tree requires a registry");
  if (!root_) throw Error("tree requires a root node");
}

void Event::set(VariableId variable, ValueId value) {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), variable,
                             [](const auto& lit, VariableId v) { return lit.first < v; });
  if (it != literals_.end() && it->first == variable) {
    throw OverlapError("duplicate variable in event (id " + std::to_string(variable.index) + ")");
  }
  literals_.insert(it, {variable, value});
}

Event Event::with(VariableId variable, ValueId value) const {
  Event copy = *this;
  copy.set(variable, value);
  return copy;
}

std::optional<ValueId> Event::value_of(VariableId variable) const {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), variable,
                             [](const auto& lit, VariableId v) { return lit.first < v; });
  if (it != literals_.end() && it->first == variable) return it->second;
  return std::nullopt;
}

bool Event::disjoint_with(const Event& other) const {
  for (const auto& [var, _] : other.literals_) {
    if (contains(var)) return false;
  }
  return true;
}

Event Event::merged_with(const Event& other) const {
  Event merged = *this;
  for (const auto& [var, val] : other.literals_) merged.set(var, val);
  return merged;
}

namespace {

std::string render_steps(const VariableRegistry& reg,
                         const std::vector<std::pair<VariableId, ValueId>>& steps) {
  if (steps.empty()) return "root";
  std::string out;
  for (const auto& [var, val] : steps) {
    if (!out.empty()) out += ", ";
    out += reg.literal(var, val);
  }
  return out;
}

void check_event(const VariableRegistry& reg, const Event& e) {
  for (const auto& [var, val] : e) {
    if (!reg.valid(var)) {
      throw UnknownSymbolError("event mentions variable id " + std::to_string(var.index) +
                               " not in registry");
    }
    if (!reg.valid(var, val)) {
      throw UnknownSymbolError("event mentions value id " + std::to_string(val.index) +
                               " not in domain of '" + reg.variable_name(var) + "'");
    }
  }
}

struct Validator {
  const VariableRegistry& reg;
  std::vector<Violation> out;
  std::vector<std::pair<VariableId, ValueId>> steps;
  std::vector<bool> resolved;

  void report(std::string message) {
    out.push_back({steps, render_steps(reg, steps), std::move(message)});
  }

  void visit(const NodePtr& node) {
    if (node->is_leaf()) return;
    const VariableId var = node->variable();
    if (!reg.valid(var)) {
      report("node resolves variable id " + std::to_string(var.index) + " not in registry");
      return;
    }
    const std::string& var_name = reg.variable_name(var);
    if (resolved[var.index]) {
      report("variable '" + var_name + "' already resolved on this path");
    }

    std::set<std::uint32_t> seen;
    Rational sum;
    bool values_ok = true;
    for (const Branch& b : node->branches()) {
      if (!reg.valid(var, b.value)) {
        report("branch value id " + std::to_string(b.value.index) + " not in domain of '" +
               var_name + "'");
        values_ok = false;
        continue;
      }
      if (!seen.insert(b.value.index).second) {
        report("duplicate branch value '" + reg.value_name(var, b.value) + "' at node '" +
               var_name + "'");
      }
      if (!b.prob.in_unit_interval()) {
        report("probability " + b.prob.to_string() + " of branch '" +
               reg.value_name(var, b.value) + "' at node '" + var_name + "' outside [0,1]");
      }
      sum += b.prob;
    }
    if (!(sum == Rational(1))) {
      report("branch probabilities at node '" + var_name + "' sum to " + sum.to_string() +
             ", expected 1");
    }
    if (values_ok && seen.size() != reg.domain_size(var)) {
      for (std::uint32_t i = 0; i < reg.domain_size(var); ++i) {
        if (!seen.contains(i)) {
          report("node '" + var_name + "' is missing a branch for value '" +
                 reg.value_name(var, ValueId{i}) + "'");
        }
      }
    }

    const bool was_resolved = resolved[var.index];
    resolved[var.index] = true;
    for (const Branch& b : node->branches()) {
      steps.push_back({var, b.value});
      visit(b.child);
      steps.pop_back();
    }
    resolved[var.index] = was_resolved;
  }
};

}  // namespace

std::vector<Violation> validate(const ProbabilityTree& tree) {
  Validator v{tree.registry(), {}, {}, std::vector<bool>(tree.registry().variable_count(), false)};
  v.visit(tree.root());
  return std::move(v.out);
}

bool is_valid(const ProbabilityTree& tree) { return validate(tree).empty(); }

Rational path_probability(const ProbabilityTree& tree,
                          std::span<const std::pair<VariableId, ValueId>> steps) {
  const NodePtr* node = &tree.root();
  Rational product(1);
  for (const auto& [var, val] : steps) {
    if ((*node)->is_leaf()) {
      throw PathNotFoundError("path continues past a leaf");
    }
    if ((*node)->variable() != var) {
      throw PathNotFoundError("path step mentions '" +
                              (tree.registry().valid(var) ? tree.registry().variable_name(var)
                                                          : std::string("?")) +
                              "' but node resolves '" +
                              tree.registry().variable_name((*node)->variable()) + "'");
    }
    const Branch* taken = nullptr;
    for (const Branch& b : (*node)->branches()) {
      if (b.value == val) {
        taken = &b;
        break;
      }
    }
    if (!taken) {
      throw PathNotFoundError("no branch for value at node '" +
                              tree.registry().variable_name(var) + "'");
    }
    product *= taken->prob;
    node = &taken->child;
  }
  if (!(*node)->is_leaf()) {
    throw PathNotFoundError("path stops before reaching a leaf");
  }
  return product;
}

namespace {

Rational event_mass(const NodePtr& node, const Event& e, std::size_t matched) {
  if (node->is_leaf()) {
    return matched == e.size() ? Rational(1) : Rational(0);
  }
  const auto want = e.value_of(node->variable());
  Rational total;
  for (const Branch& b : node->branches()) {
    if (want && !(b.value == *want)) continue;
    if (b.prob.is_zero()) continue;
    total += b.prob * event_mass(b.child, e, matched + (want ? 1 : 0));
  }
  return total;
}

}  // namespace

Rational event_probability(const ProbabilityTree& tree, const Event& e) {
  check_event(tree.registry(), e);
  return event_mass(tree.root(), e, 0);
}

namespace {

void collect_leaves(const NodePtr& node, std::vector<std::pair<VariableId, ValueId>>& steps,
                    const Rational& mass, std::vector<Leaf>& out) {
  if (node->is_leaf()) {
    out.push_back({steps, mass});
    return;
  }
  for (const Branch& b : node->branches()) {
    steps.push_back({node->variable(), b.value});
    collect_leaves(b.child, steps, mass * b.prob, out);
    steps.pop_back();
  }
}

}  // namespace

std::vector<Leaf> enumerate_leaves(const ProbabilityTree& tree) {
  std::vector<Leaf> out;
  std::vector<std::pair<VariableId, ValueId>> steps;
  collect_leaves(tree.root(), steps, Rational(1), out);
  return out;
}

namespace {

bool equal_nodes(const VariableRegistry& ra, const NodePtr& a, const VariableRegistry& rb,
                 const NodePtr& b) {
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return true;
  if (ra.variable_name(a->variable()) != rb.variable_name(b->variable())) return false;
  auto ba = a->branches();
  auto bb = b->branches();
  if (ba.size() != bb.size()) return false;
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (ra.value_name(a->variable(), ba[i].value) != rb.value_name(b->variable(), bb[i].value)) {
      return false;
    }
    if (!(ba[i].prob == bb[i].prob)) return false;
    if (!equal_nodes(ra, ba[i].child, rb, bb[i].child)) return false;
  }
  return true;
}

}  // namespace

bool equal_trees(const ProbabilityTree& a, const ProbabilityTree& b) {
  return equal_nodes(a.registry(), a.root(), b.registry(), b.root());
}

}  // namespace ptree
