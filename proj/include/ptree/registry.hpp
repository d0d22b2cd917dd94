#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptree {

// Index of a variable in a VariableRegistry.
struct VariableId {
  std::uint32_t index = 0;
  auto operator<=>(const VariableId&) const = default;
};

// Index of a value within its owning variable's domain.
struct ValueId {
  std::uint32_t index = 0;
  auto operator<=>(const ValueId&) const = default;
};

// Interning table for variable names and their finite value domains.
// Appending variables never invalidates existing ids, so a registry copy
// extended with new variables can be shared with trees built against the
// original (grafting relies on this).
class VariableRegistry {
 public:
  // Throws Error on a duplicate variable name, an empty domain, or
  // duplicate value names within the domain.
  VariableId add_variable(std::string name, std::vector<std::string> values);

  std::size_t variable_count() const { return variables_.size(); }
  bool has_variable(std::string_view name) const;
  std::optional<VariableId> find_variable(std::string_view name) const;
  VariableId require_variable(std::string_view name) const;  // UnknownSymbolError
  const std::string& variable_name(VariableId v) const;

  std::size_t domain_size(VariableId v) const;
  std::optional<ValueId> find_value(VariableId v, std::string_view name) const;
  ValueId require_value(VariableId v, std::string_view name) const;  // UnknownSymbolError
  const std::string& value_name(VariableId v, ValueId val) const;

  bool valid(VariableId v) const { return v.index < variables_.size(); }
  bool valid(VariableId v, ValueId val) const {
    return valid(v) && val.index < variables_[v.index].values.size();
  }

  // Renders "X=x" for diagnostics.
  std::string literal(VariableId v, ValueId val) const;

 private:
  struct VariableInfo {
    std::string name;
    std::vector<std::string> values;
    std::map<std::string, std::uint32_t, std::less<>> value_index;
  };
  const VariableInfo& info(VariableId v) const;  // bounds-checked

  std::vector<VariableInfo> variables_;
  std::map<std::string, std::uint32_t, std::less<>> index_by_name_;
};

bool same_contents(const VariableRegistry& a, const VariableRegistry& b);

}  // namespace ptree
