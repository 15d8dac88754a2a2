#pragma once

#include "kge/common.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace kge {

/// Bidirectional entity/relation name <-> index maps. Relation names cover the
/// original relations only; reciprocal relations occupy indices
/// [n_relations_original, 2 * n_relations_original) once augmentation is applied.
class Vocab {
 public:
  int n_entities() const { return static_cast<int>(entity_names_.size()); }
  int n_relations_original() const { return static_cast<int>(relation_names_.size()); }
  int n_relations_total() const { return n_relations_total_; }
  bool augmented() const { return n_relations_total_ != static_cast<int>(relation_names_.size()); }

  int add_entity(const std::string& name) {
    auto it = entity_index_.find(name);
    if (it != entity_index_.end()) return it->second;
    int idx = n_entities();
    entity_index_.emplace(name, idx);
    entity_names_.push_back(name);
    return idx;
  }

  int add_relation(const std::string& name) {
    auto it = relation_index_.find(name);
    if (it != relation_index_.end()) return it->second;
    if (augmented())
      throw state_error("cannot add relation '" + name + "' after reciprocal augmentation");
    int idx = n_relations_original();
    relation_index_.emplace(name, idx);
    relation_names_.push_back(name);
    ++n_relations_total_;
    return idx;
  }

  /// Returns the entity index or -1 when the name is unknown.
  int find_entity(const std::string& name) const {
    auto it = entity_index_.find(name);
    return it == entity_index_.end() ? -1 : it->second;
  }

  int find_relation(const std::string& name) const {
    auto it = relation_index_.find(name);
    return it == relation_index_.end() ? -1 : it->second;
  }

  const std::string& entity_name(int idx) const { return entity_names_.at(idx); }

  /// Name for any relation index, including reciprocal ones (display form).
  std::string relation_name(int idx) const {
    int n_orig = n_relations_original();
    if (idx < n_orig) return relation_names_.at(idx);
    return relation_names_.at(idx - n_orig) + "^-1";
  }

  const std::vector<std::string>& entity_names() const { return entity_names_; }
  const std::vector<std::string>& relation_names() const { return relation_names_; }

  /// Marks the vocabulary as reciprocal-augmented: doubles the relation index space.
  void apply_reciprocal_augmentation() {
    if (augmented()) throw state_error("vocabulary is already reciprocal-augmented");
    n_relations_total_ = 2 * n_relations_original();
  }

  /// Rebuilds a vocabulary from stored name lists (used by model deserialization).
  static Vocab from_names(std::vector<std::string> entities, std::vector<std::string> relations,
                          bool augmented) {
    Vocab v;
    for (auto& e : entities) v.add_entity(e);
    for (auto& r : relations) v.add_relation(r);
    if (augmented) v.apply_reciprocal_augmentation();
    return v;
  }

 private:
  std::vector<std::string> entity_names_;
  std::vector<std::string> relation_names_;
  std::unordered_map<std::string, int> entity_index_;
  std::unordered_map<std::string, int> relation_index_;
  int n_relations_total_ = 0;
};

}  // namespace kge
