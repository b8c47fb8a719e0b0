/*!
 * Copyright 2026 by Contributors
 * \file model_io.cc
 */
#include "booster/gbt/model_io.h"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "booster/error.h"

namespace booster::gbt {

void write_model(const Ensemble& e, std::ostream& os) {
  const auto old = os.precision(17);
  os << "booster-model 1 loss=" << to_string(e.loss) << " base_score=" << e.base_score
     << " learning_rate=" << e.learning_rate << " n_trees=" << e.trees.size() << '\n';
  for (std::size_t t = 0; t < e.trees.size(); ++t) {
    const auto& tree = e.trees[t];
    os << "tree " << t << ' ' << tree.size() << '\n';
    for (std::size_t i = 0; i < tree.size(); ++i) {
      const Node& n = tree.node(i);
      os << i;
      if (n.is_leaf) {
        os << " leaf " << n.weight;
      } else {
        os << " split " << n.predicate.field_id << ' ' << n.predicate.bin_boundary << ' '
           << (n.predicate.missing_goes_left ? "left" : "right") << ' ' << n.left << ' ' << n.right;
      }
      os << ' ' << n.n_records << ' ' << n.depth << '\n';
    }
  }
  os.precision(old);
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw FormatError("model line " + std::to_string(line) + ": " + msg);
}

std::string kv_value(const std::string& tok, const std::string& key, std::size_t line) {
  if (tok.rfind(key + "=", 0) != 0) fail(line, "expected " + key);
  return tok.substr(key.size() + 1);
}

}  // namespace

Ensemble read_model(std::istream& is) {
  Ensemble e;
  std::string raw;
  std::size_t line_no = 1;
  if (!std::getline(is, raw)) throw FormatError("model: empty input");
  std::istringstream head(raw);
  std::string magic, version, loss, base, lr, nt;
  if (!(head >> magic >> version >> loss >> base >> lr >> nt) || magic != "booster-model" || version != "1") {
    fail(line_no, "bad header");
  }
  std::size_t n_trees = 0;
  try {
    e.loss = loss_from_string(kv_value(loss, "loss", line_no));
    e.base_score = std::stod(kv_value(base, "base_score", line_no));
    e.learning_rate = std::stod(kv_value(lr, "learning_rate", line_no));
    n_trees = std::stoul(kv_value(nt, "n_trees", line_no));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception&) {
    fail(line_no, "bad header value");
  }
  for (std::size_t t = 0; t < n_trees; ++t) {
    ++line_no;
    if (!std::getline(is, raw)) fail(line_no, "truncated model");
    std::istringstream tl(raw);
    std::string word;
    std::size_t idx = 0, n_nodes = 0;
    if (!(tl >> word >> idx >> n_nodes) || word != "tree" || idx != t || n_nodes == 0) fail(line_no, "bad tree line");
    std::vector<Node> nodes(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
      ++line_no;
      if (!std::getline(is, raw)) fail(line_no, "truncated model");
      std::istringstream nl(raw);
      std::size_t id = 0;
      std::string kind;
      if (!(nl >> id >> kind) || id != i) fail(line_no, "bad node id");
      Node& n = nodes[i];
      if (kind == "leaf") {
        n.is_leaf = true;
        if (!(nl >> n.weight)) fail(line_no, "bad leaf");
      } else if (kind == "split") {
        n.is_leaf = false;
        std::string dir;
        if (!(nl >> n.predicate.field_id >> n.predicate.bin_boundary >> dir >> n.left >> n.right)) {
          fail(line_no, "bad split");
        }
        if (dir != "left" && dir != "right") fail(line_no, "bad missing direction");
        n.predicate.missing_goes_left = dir == "left";
      } else {
        fail(line_no, "unknown node kind '" + kind + "'");
      }
      if (!(nl >> n.n_records >> n.depth)) fail(line_no, "missing node counters");
    }
    try {
      e.trees.emplace_back(std::move(nodes));
    } catch (const InvalidArgument& ex) {
      fail(line_no, ex.what());
    }
  }
  return e;
}

void save_model(const Ensemble& ensemble, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  write_model(ensemble, os);
}

Ensemble load_model(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return read_model(is);
}

}  // namespace booster::gbt
