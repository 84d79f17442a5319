#pragma once

#include <cctype>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "thetamirror/json_io.hpp"

namespace thetamirror::cli {

namespace fs = std::filesystem;
using io::json;

struct RunConfig {
  std::string command;
  std::string pair_path;
  std::string table_path;
  std::string walls_path;
  std::optional<std::int64_t> bound;  // default 3
  std::vector<std::int64_t> weights;
  std::string format = "text";
  std::uint64_t seed = 0;
};

inline void validate(const RunConfig& c) {
  require(c.bound.value_or(3) >= 1, "precondition", "--bound must be at least 1");
  for (auto w : c.weights) require(w >= 1, "precondition", "--weights must all be at least 1");
  require(c.format == "json" || c.format == "text" || c.format == "svg", "precondition",
          "--format must be json, text or svg");
}

inline TruncationIdeal ideal_for(const RunConfig& c, std::size_t rank) {
  if (c.weights.empty()) return TruncationIdeal::uniform(rank, c.bound.value_or(3));
  require(c.weights.size() == rank, "dimension-mismatch",
          "--weights needs " + std::to_string(rank) + " entries");
  return TruncationIdeal(ClassVector(c.weights), c.bound.value_or(3));
}

inline PairDescriptor load_pair(const std::string& path) {
  require(!path.empty(), "precondition", "--pair is required");
  return io::pair_from_json(io::read_json(path));
}

inline InvariantTable load_table(const std::string& path, const PairDescriptor& pair) {
  if (path.empty()) return {};
  return io::table_from_json(io::read_json(path), pair);
}

// Walls file; looijenga files name their pair relative to themselves
// unless --pair is given.
struct LoadedWalls {
  std::optional<PairDescriptor> pair;
  WallStructure walls;
};

inline LoadedWalls load_walls(const RunConfig& c, bool override_ideal) {
  require(!c.walls_path.empty(), "precondition", "--walls or --planar is required");
  const json j = io::read_json(c.walls_path);
  io::check_header(j, "walls");
  std::optional<PairDescriptor> pair;
  if (j.value("mode", std::string()) == "looijenga") {
    std::string path = c.pair_path;
    if (path.empty()) {
      require(j.contains("pair") && j["pair"].is_string(), "precondition",
              "looijenga walls need --pair or a 'pair' field");
      path = (fs::path(c.walls_path).parent_path() / j["pair"].get<std::string>()).string();
    }
    pair = load_pair(path);
  }
  std::optional<TruncationIdeal> ideal;
  if (override_ideal && (c.bound || !c.weights.empty())) {
    const std::size_t rank = pair ? pair->class_rank()
                                  : j.value("class_names", std::vector<std::string>{}).size();
    ideal = ideal_for(c, rank);
  }
  auto s = io::walls_from_json(j, pair ? &*pair : nullptr, ideal);
  return {std::move(pair), std::move(s)};
}

// "D1+2*D3", "0" or "1,0,2,0".
inline LatticeVector parse_point(const std::string& text, const std::vector<std::string>& names,
                                 std::size_t rank) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  require(!s.empty(), "precondition", "empty point");
  LatticeVector v(rank);
  if (s == "0") return v;
  const bool symbolic = std::any_of(s.begin(), s.end(), [](char ch) {
    return std::isalpha(static_cast<unsigned char>(ch));
  });
  if (!symbolic) {
    std::vector<std::int64_t> xs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        xs.push_back(std::stoll(item));
      } catch (const std::exception&) {
        fail("precondition", "bad point '" + text + "'");
      }
    }
    require(xs.size() == rank, "dimension-mismatch",
            "point '" + text + "' needs " + std::to_string(rank) + " coordinates");
    return LatticeVector(std::move(xs));
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::int64_t sign = 1;
    if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    std::int64_t coeff = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        coeff = std::stoll(term.substr(0, star));
      } catch (const std::exception&) {
        fail("precondition", "bad coefficient in '" + text + "'");
      }
      term = term.substr(star + 1);
    }
    auto it = std::find(names.begin(), names.end(), term);
    require(it != names.end(), "precondition", "unknown component '" + term + "'");
    v[static_cast<std::size_t>(it - names.begin())] += sign * coeff;
  }
  return v;
}

inline RationalPoint parse_rational_point(const std::string& text) {
  RationalPoint x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) x.push_back(parse_rational(item));
  return x;
}

inline void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace thetamirror::cli
