#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellsu11/algebra/quad_op.h"

namespace bellsu11::algebra {

enum class Role {
  kGenerator,   // exponentiated in a pipeline; must be hermitian
  kObservable,  // photodetection operator
  kDerived      // auxiliary basis transcribed from the derivation of the correlation
};

const char* role_name(Role role);

struct CatalogEntry {
  std::string name;
  QuadOp op;
  Role role = Role::kGenerator;
  std::string note;
};

class UnknownGeneratorError : public std::out_of_range {
 public:
  UnknownGeneratorError(const std::string& name, const std::vector<std::string>& valid);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Immutable name -> operator table. Entry order is the construction order and
// is what list-generators prints.
class GeneratorCatalog {
 public:
  explicit GeneratorCatalog(std::vector<CatalogEntry> entries);

  // Every operator named in the optical Bell-test constructions.
  static const GeneratorCatalog& standard();

  const QuadOp& at(std::string_view name) const;
  const CatalogEntry& entry(std::string_view name) const;
  bool contains(std::string_view name) const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<std::string> names() const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// {name, role, hermitian, coefficients: [{kind, i, j, re_num, re_den, im_num, im_den}], scalar}
nlohmann::json to_json(const CatalogEntry& entry);
nlohmann::json to_json(const GeneratorCatalog& catalog);
nlohmann::json coefficient_json(const ComplexRational& c);

class CatalogFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inverse of to_json(catalog). Throws CatalogFormatError.
GeneratorCatalog catalog_from_json(const nlohmann::json& doc);

}  // namespace bellsu11::algebra
