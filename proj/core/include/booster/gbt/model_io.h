/*!
 * Copyright 2026 by Contributors
 * \file model_io.h
 * \brief Text model format.
 *
 *   booster-model 1 loss=<name> base_score=<x> learning_rate=<x> n_trees=<k>
 *   tree <index> <n_nodes>
 *   <id> split <field> <boundary> <left|right> <left_child> <right_child> <n_records> <depth>
 *   <id> leaf <weight> <n_records> <depth>
 *
 * Reals are written with 17 significant digits so the round trip is exact.
 */
#ifndef BOOSTER_GBT_MODEL_IO_H_
#define BOOSTER_GBT_MODEL_IO_H_

#include <iosfwd>
#include <string>

#include "booster/gbt/tree.h"

namespace booster::gbt {

void write_model(const Ensemble& ensemble, std::ostream& os);
Ensemble read_model(std::istream& is);
void save_model(const Ensemble& ensemble, const std::string& path);
Ensemble load_model(const std::string& path);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_MODEL_IO_H_
