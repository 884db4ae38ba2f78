#pragma once

// Certificate bundles: line-oriented records of claims with their
// certificates or search statistics, and an offline verifier.
//
// Format (keys in fixed order, no timestamps):
//
//   bundle twotree 1
//   meta <key> <value...>
//   graph <name> <graph6> <fnv1a64 hex>
//   rotation <name> <v>:<clockwise neighbors comma-separated> ...
//   claim <id>
//     <key> <value...>
//   end

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "twotree/embedding.hpp"
#include "twotree/error.hpp"

namespace twotree {

inline constexpr const char* kVersion = "0.1.0";

using Fields = std::vector<std::pair<std::string, std::string>>;

struct ClaimRecord {
  std::string id;
  Fields fields;

  const std::string* find(const std::string& key) const;
  const std::string& at(const std::string& key) const;
};

struct NamedGraph {
  std::string name;
  std::string graph6;
  // Optional embedding, "v:a,b,c" tokens separated by spaces.
  std::string rotation;
};

struct Bundle {
  Fields meta;
  std::vector<NamedGraph> graphs;
  std::vector<ClaimRecord> claims;

  const NamedGraph& graph(const std::string& name) const;
};

std::string fnv1a64_hex(const std::string& text);
std::string rotation_to_string(const EmbeddedGraph& eg);
EmbeddedGraph rotation_from_string(const std::string& text);

void write_bundle(std::ostream& out, const Bundle& b);
Bundle read_bundle(std::istream& in);

// A step of the certification chain did not hold.
class ClaimFailure : public Error {
 public:
  ClaimFailure(const std::string& id, const std::string& statement, const std::string& detail)
      : Error("claim " + id + " failed (" + statement + "): " + detail), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

struct CertifyOptions {
  std::string command = "certify counterexample";
  unsigned threads = 1;
  // Run the direct spanning 2-tree search on the order-38 graph.
  bool direct = true;
  // Top-level branches of the direct search already refuted (from a
  // checkpoint) and a callback receiving the count after each branch.
  std::size_t resume_from = 0;
  std::function<void(std::size_t, std::size_t)> checkpoint;
  // Progress messages.
  std::function<void(const std::string&)> log;
};

// Builds the order-38 maximal planar graph without a spanning 2-tree and
// records every step. Throws ClaimFailure when a step does not hold.
Bundle certify_counterexample(const CertifyOptions& options = {});

// Replays every record without searching. Returns one message per problem.
std::vector<std::string> verify_bundle(const Bundle& b);

}  // namespace twotree
