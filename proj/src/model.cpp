#include "onteval/model.hpp"

#include <algorithm>
#include <deque>

namespace onteval {

namespace {
const std::set<Iri> kEmptyIriSet;
const std::vector<std::pair<Iri, Object>> kEmptyAssertions;
}  // namespace

KnowledgeBase::KnowledgeBase(Data data) : data_(std::move(data)) {
  validate();
  build_indexes();
}

void KnowledgeBase::validate() const {
  const auto& s = data_.schema;
  for (const auto& c : s.concepts)
    if (s.properties.count(c))
      throw ModelError("concept and property sets overlap at " + c.value());
  for (const auto& [child, parent] : s.hierarchy) {
    if (!s.concepts.count(child) || !s.concepts.count(parent))
      throw ModelError("hierarchy references unknown class: " + child.value() +
                       " -> " + parent.value());
  }
  for (const auto& i : data_.instances)
    if (s.concepts.count(i) || s.properties.count(i))
      throw ModelError("instance collides with schema entity: " + i.value());
  for (const auto& [c, members] : data_.concept_inst) {
    if (!s.concepts.count(c))
      throw ModelError("concept_inst key is not a class: " + c.value());
    for (const auto& m : members)
      if (!data_.instances.count(m))
        throw ModelError("concept_inst member is not an instance: " + m.value());
  }
  for (const auto& [p, pairs] : data_.property_inst) {
    if (!s.properties.count(p))
      throw ModelError("property_inst key is not a property: " + p.value());
    for (const auto& [subj, obj] : pairs) {
      if (!data_.instances.count(subj))
        throw ModelError("assertion subject is not an instance: " + subj.value());
      if (const Iri* o = std::get_if<Iri>(&obj)) {
        if (!data_.instances.count(*o))
          throw ModelError("assertion object is not an instance: " + o->value());
      } else if (!data_.literals.count(std::get<Literal>(obj))) {
        throw ModelError("assertion object literal missing from literal set");
      }
    }
  }

  // Acyclicity of the child->parent graph (iterative DFS, three colours).
  std::map<Iri, std::set<Iri>> up;
  for (const auto& [child, parent] : s.hierarchy) up[child].insert(parent);
  std::map<Iri, int> colour;  // 0 white, 1 grey, 2 black
  for (const auto& c : s.concepts) {
    if (colour[c] != 0) continue;
    std::vector<std::pair<Iri, bool>> stack{{c, false}};
    while (!stack.empty()) {
      auto [node, done] = stack.back();
      stack.pop_back();
      if (done) {
        colour[node] = 2;
        continue;
      }
      if (colour[node] == 2) continue;
      if (colour[node] == 1) continue;
      colour[node] = 1;
      stack.push_back({node, true});
      for (const auto& p : up[node]) {
        if (colour[p] == 1)
          throw ModelError("subsumption cycle through " + p.value());
        if (colour[p] == 0) stack.push_back({p, false});
      }
    }
  }
}

void KnowledgeBase::build_indexes() {
  const auto& s = data_.schema;
  for (const auto& [child, parent] : s.hierarchy) {
    parents_[child].insert(parent);
    children_[parent].insert(child);
  }

  for (const auto& [c, members] : data_.concept_inst)
    if (!members.empty()) populated_.insert(c);

  for (const auto& [p, pairs] : data_.property_inst) {
    assertion_count_ += pairs.size();
    for (const auto& [subj, obj] : pairs) out_[subj].emplace_back(p, obj);
  }
  for (auto& [subj, list] : out_) std::sort(list.begin(), list.end());

  for (const auto& [c, members] : data_.concept_inst)
    for (const auto& m : members) classes_of_[m].insert(c);

  // Depths and ancestor sets by dynamic programming over the DAG.
  for (const auto& c : s.concepts) compute_depth_and_ancestors(c);
}

void KnowledgeBase::compute_depth_and_ancestors(const Iri& c) {
  if (depth_.count(c)) return;
  // Resolve dependencies first (graph is acyclic, validated above).
  std::vector<Iri> order;
  std::vector<Iri> stack{c};
  std::set<Iri> seen;
  while (!stack.empty()) {
    Iri node = stack.back();
    stack.pop_back();
    if (seen.count(node)) continue;
    seen.insert(node);
    order.push_back(node);
    auto it = parents_.find(node);
    if (it != parents_.end())
      for (const auto& p : it->second)
        if (!depth_.count(p)) stack.push_back(p);
  }
  // Process in reverse discovery order until fixpoint-free topological
  // resolution: repeatedly settle nodes whose parents are all settled.
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Iri& node = *it;
      if (depth_.count(node)) continue;
      auto pit = parents_.find(node);
      if (pit == parents_.end() || pit->second.empty()) {
        depth_[node] = 1;
        ancestors_[node] = {};
        progress = true;
        continue;
      }
      bool ready = true;
      int best = 0;
      std::set<Iri> anc;
      for (const auto& p : pit->second) {
        auto dit = depth_.find(p);
        if (dit == depth_.end()) {
          ready = false;
          break;
        }
        best = best == 0 ? dit->second : std::min(best, dit->second);
        anc.insert(p);
        const auto& pa = ancestors_.at(p);
        anc.insert(pa.begin(), pa.end());
      }
      if (ready) {
        depth_[node] = best + 1;
        ancestors_[node] = std::move(anc);
        progress = true;
      }
    }
  }
}

const std::set<Iri>& KnowledgeBase::instances_of(const Iri& c) const {
  if (!data_.schema.concepts.count(c))
    throw UnknownEntityError("unknown concept: " + c.value());
  auto it = data_.concept_inst.find(c);
  return it == data_.concept_inst.end() ? kEmptyIriSet : it->second;
}

const std::set<Iri>& KnowledgeBase::classes_of(const Iri& i) const {
  auto it = classes_of_.find(i);
  return it == classes_of_.end() ? kEmptyIriSet : it->second;
}

std::set<Iri> KnowledgeBase::siblings_of(const Iri& c) const {
  if (!data_.schema.concepts.count(c))
    throw UnknownEntityError("unknown concept: " + c.value());
  std::set<Iri> result;
  auto pit = parents_.find(c);
  if (pit == parents_.end()) return result;
  for (const auto& p : pit->second) {
    auto cit = children_.find(p);
    if (cit == children_.end()) continue;
    for (const auto& d : cit->second)
      if (d != c) result.insert(d);
  }
  return result;
}

int KnowledgeBase::concept_depth(const Iri& c) const {
  auto it = depth_.find(c);
  if (it == depth_.end())
    throw UnknownEntityError("unknown concept: " + c.value());
  return it->second;
}

const std::vector<std::pair<Iri, Object>>& KnowledgeBase::out_assertions(
    const Iri& i) const {
  if (!data_.instances.count(i))
    throw UnknownEntityError("unknown instance: " + i.value());
  auto it = out_.find(i);
  return it == out_.end() ? kEmptyAssertions : it->second;
}

const std::set<Iri>& KnowledgeBase::parents_of(const Iri& c) const {
  auto it = parents_.find(c);
  return it == parents_.end() ? kEmptyIriSet : it->second;
}

const std::set<Iri>& KnowledgeBase::children_of(const Iri& c) const {
  auto it = children_.find(c);
  return it == children_.end() ? kEmptyIriSet : it->second;
}

const std::set<Iri>& KnowledgeBase::ancestors_of(const Iri& c) const {
  auto it = ancestors_.find(c);
  if (it == ancestors_.end())
    throw UnknownEntityError("unknown concept: " + c.value());
  return it->second;
}

std::string KnowledgeBase::render(const Iri& iri) const {
  auto it = data_.labels.find(iri);
  if (it != data_.labels.end()) return it->second;
  return std::string(iri.local_name());
}

std::string KnowledgeBase::render(const Object& o) const {
  if (const Iri* iri = std::get_if<Iri>(&o)) return render(*iri);
  return std::get<Literal>(o).lexical;
}

}  // namespace onteval
