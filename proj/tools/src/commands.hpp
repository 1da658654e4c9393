#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace wittgrass::cli {

using Json = nlohmann::ordered_json;

struct Report {
  Json parameters = Json::object();
  Json result = Json::object();
  std::string text;
  std::string csv;  // empty when the command has no tabular form
};

struct Common {
  int workers = 1;
  unsigned seed = 0;
};

struct WittLawsArgs {
  std::int64_t p = 2;
  int m = 2;
};
Report witt_laws_command(const WittLawsArgs& a);

struct DominanceArgs {
  std::string lhs, rhs;
};
Report dominance_command(const DominanceArgs& a);

struct SnfArgs {
  std::string matrix;
};
Report snf_command(const SnfArgs& a);

struct DetArgs {
  std::string matrix;
  std::optional<std::string> chain;
};
Report det_command(const DetArgs& a);

struct CountArgs {
  int n = 0, c = 0;
  std::int64_t q = 0;
  std::optional<std::string> type;
  bool leq = false;
};
Report count_command(const CountArgs& a, const Common& common);

struct DemazureArgs {
  int n = 0;
  std::string type;
  std::int64_t q = 0;
  bool fibers = false;
};
Report demazure_command(const DemazureArgs& a, const Common& common);

struct TameArgs {
  std::int64_t p = 0;
  int d = 1;
  std::string a, b;
};
Report tame_command(const TameArgs& a);

struct CocycleArgs {
  std::int64_t p = 0;
  int d = 1;
  int n = 0;
  std::string g, h;
  std::optional<int> a;
  std::optional<int> precision;
  int check = 0;  // random triples for the cocycle identity
};
Report cocycle_command(const CocycleArgs& a, const Common& common);

}  // namespace wittgrass::cli
