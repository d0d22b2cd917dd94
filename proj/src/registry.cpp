#include "ptree/registry.hpp"

#include "ptree/errors.hpp"

namespace ptree {

VariableId VariableRegistry::add_variable(std::string name, std::vector<std::string> values) {
  if (name.empty()) throw Error("variable name must be nonempty");
  if (index_by_name_.contains(name)) throw Error("duplicate variable '" + name + "'");
  if (values.empty()) throw Error("variable '" + name + "' has an empty domain");

  VariableInfo info;
  info.name = name;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].empty()) throw Error("empty value name in domain of '" + name + "'");
    auto [_, inserted] = info.value_index.emplace(values[i], static_cast<std::uint32_t>(i));
    if (!inserted) {
      throw Error("duplicate value '" + values[i] + "' in domain of '" + name + "'");
    }
  }
  info.values = std::move(values);

  const auto id = static_cast<std::uint32_t>(variables_.size());
  index_by_name_.emplace(std::move(name), id);
  variables_.push_back(std::move(info));
  return VariableId{id};
}

bool VariableRegistry::has_variable(std::string_view name) const {
  return index_by_name_.find(name) != index_by_name_.end();
}

std::optional<VariableId> VariableRegistry::find_variable(std::string_view name) const {
  auto it = index_by_name_.find(name);
  if (it == index_by_name_.end()) return std::nullopt;
  return VariableId{it->second};
}

VariableId VariableRegistry::require_variable(std::string_view name) const {
  if (auto id = find_variable(name)) return *id;
  throw UnknownSymbolError("unknown variable '" + std::string(name) + "'");
}

const VariableRegistry::VariableInfo& VariableRegistry::info(VariableId v) const {
  if (!valid(v)) {
    throw UnknownSymbolError("variable id " + std::to_string(v.index) + " not in registry");
  }
  return variables_[v.index];
}

const std::string& VariableRegistry::variable_name(VariableId v) const { return info(v).name; }

std::size_t VariableRegistry::domain_size(VariableId v) const { return info(v).values.size(); }

std::optional<ValueId> VariableRegistry::find_value(VariableId v, std::string_view name) const {
  const auto& in = info(v);
  auto it = in.value_index.find(name);
  if (it == in.value_index.end()) return std::nullopt;
  return ValueId{it->second};
}

ValueId VariableRegistry::require_value(VariableId v, std::string_view name) const {
  if (auto id = find_value(v, name)) return *id;
  throw UnknownSymbolError("unknown value '" + std::string(name) + "' for variable '" +
                           info(v).name + "'");
}

const std::string& VariableRegistry::value_name(VariableId v, ValueId val) const {
  const auto& in = info(v);
  if (val.index >= in.values.size()) {
    throw UnknownSymbolError("value id " + std::to_string(val.index) +
                             " not in domain of variable '" + in.name + "'");
  }
  return in.values[val.index];
}

std::string VariableRegistry::literal(VariableId v, ValueId val) const {
  return variable_name(v) + "=" + value_name(v, val);
}

bool same_contents(const VariableRegistry& a, const VariableRegistry& b) {
  if (a.variable_count() != b.variable_count()) return false;
  for (std::uint32_t i = 0; i < a.variable_count(); ++i) {
    const VariableId v{i};
    if (a.variable_name(v) != b.variable_name(v)) return false;
    if (a.domain_size(v) != b.domain_size(v)) return false;
    for (std::uint32_t j = 0; j < a.domain_size(v); ++j) {
      if (a.value_name(v, ValueId{j}) != b.value_name(v, ValueId{j})) return false;
    }
  }
  return true;
}

}  // namespace ptree
