#include "biasmax/groups.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <string>

#include "biasmax/csv.hpp"
#include "biasmax/errors.hpp"
#include "biasmax/rng.hpp"

namespace biasmax {

double GroupStructure::gamma_min() const {
  double g = 1.0;
  for (int s : sizes) g = std::min(g, static_cast<double>(s) / items());
  return g;
}

std::vector<std::vector<int>> GroupStructure::members() const {
  std::vector<std::vector<int>> out(group_count);
  for (int l = 0; l < group_count; ++l) out[l].reserve(sizes[l]);
  for (int i = 0; i < items(); ++i) out[assignment[i]].push_back(i);
  return out;
}

GroupStructure GroupStructure::from_assignment(std::vector<int> assignment, int group_count) {
  if (group_count < 1) throw InputError("group structure: need at least one group");
  GroupStructure g;
  g.group_count = group_count;
  g.sizes.assign(group_count, 0);
  for (int a : assignment) {
    if (a < 0 || a >= group_count) throw InputError("group structure: assignment out of range");
    ++g.sizes[a];
  }
  g.assignment = std::move(assignment);
  return g;
}

GroupStructure GroupStructure::load_csv(const std::filesystem::path& path) {
  CsvReader reader(path);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields.size() != 2 || fields[0] != "item" || fields[1] != "group")
    throw InputError("groups csv: bad header '" + reader.header_line() + "', expected item,group");
  std::vector<int> assignment;
  long long expected_item = 1;
  int max_group = 0;
  while (reader.next(fields)) {
    if (fields.size() != 2) throw InputError("groups csv: row with wrong field count");
    long long item = parse_int(fields[0], "groups csv item");
    if (item != expected_item)
      throw InputError("groups csv: items must be contiguous starting at 1");
    ++expected_item;
    long long group = parse_int(fields[1], "groups csv group");
    if (group < 1) throw InputError("groups csv: group ids are 1-based");
    max_group = std::max(max_group, static_cast<int>(group));
    assignment.push_back(static_cast<int>(group - 1));
  }
  return from_assignment(std::move(assignment), max_group);
}

void GroupStructure::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write groups csv: " + path.string());
  out << "item,group\n";
  for (int i = 0; i < items(); ++i) out << (i + 1) << ',' << (assignment[i] + 1) << '\n';
}

std::vector<std::vector<int>> CategoryStructure::memberships(int item_count) const {
  std::vector<std::vector<int>> out(item_count);
  for (int j = 0; j < category_count; ++j)
    for (int i : members[j]) {
      if (i < 0 || i >= item_count) throw InputError("category structure: item out of range");
      out[i].push_back(j);
    }
  return out;
}

CategoryStructure CategoryStructure::from_members(std::vector<std::vector<int>> member_sets) {
  CategoryStructure c;
  c.category_count = static_cast<int>(member_sets.size());
  c.members = std::move(member_sets);
  std::vector<int> seen;
  bool disjoint = true;
  for (auto& set : c.members) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int i : set) seen.push_back(i);
  }
  std::sort(seen.begin(), seen.end());
  disjoint = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  c.disjoint = disjoint;
  return c;
}

CategoryStructure CategoryStructure::load_csv(const std::filesystem::path& path, int category_count) {
  CsvReader reader(path);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields.size() != 2 || fields[0] != "item" || fields[1] != "category")
    throw InputError("categories csv: bad header '" + reader.header_line() + "', expected item,category");
  std::vector<std::vector<int>> sets(std::max(category_count, 0));
  while (reader.next(fields)) {
    if (fields.size() != 2) throw InputError("categories csv: row with wrong field count");
    long long item = parse_int(fields[0], "categories csv item");
    long long cat = parse_int(fields[1], "categories csv category");
    if (item < 1) throw InputError("categories csv: item ids are 1-based");
    if (cat < 1) throw InputError("categories csv: category ids are 1-based");
    if (static_cast<int>(cat) > static_cast<int>(sets.size())) sets.resize(cat);
    sets[cat - 1].push_back(static_cast<int>(item - 1));
  }
  return from_members(std::move(sets));
}

void CategoryStructure::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write categories csv: " + path.string());
  out << "item,category\n";
  // Rows ordered by (item, category) for stable files.
  std::vector<std::pair<int, int>> rows;
  for (int j = 0; j < category_count; ++j)
    for (int i : members[j]) rows.emplace_back(i, j);
  std::sort(rows.begin(), rows.end());
  for (auto [i, j] : rows) out << (i + 1) << ',' << (j + 1) << '\n';
}

GroupStructure sample_groups(int n, std::span<const int> sizes, std::uint64_t seed) {
  long long total = 0;
  for (int s : sizes) {
    if (s < 0) throw InputError("sample_groups: negative group size");
    total += s;
  }
  if (total != n)
    throw InputError("sample_groups: sizes sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  std::vector<int> assignment(n);
  int pos = 0;
  for (int l = 0; l < static_cast<int>(sizes.size()); ++l)
    for (int c = 0; c < sizes[l]; ++c) assignment[order[pos++]] = l;
  return GroupStructure::from_assignment(std::move(assignment), static_cast<int>(sizes.size()));
}

std::vector<int> fairness_caps(const FairnessConstraint& constraint, const GroupStructure& groups, int k) {
  if (k < 1) throw InputError("fairness_caps: k must be at least 1");
  if (static_cast<int>(constraint.u.size()) != groups.group_count ||
      static_cast<int>(constraint.v.size()) != groups.group_count)
    throw InputError("fairness_caps: u and v must have one entry per group");
  constexpr double kTieEps = 1e-9;  // absorbs float dust right below integers
  std::vector<int> caps(groups.group_count);
  for (int l = 0; l < groups.group_count; ++l) {
    if (constraint.u[l] < 0.0 || constraint.v[l] < 0.0)
      throw InputError("fairness_caps: u and v must be nonnegative");
    double bound = (constraint.u[l] + constraint.v[l] * groups.gamma(l)) * k;
    caps[l] = static_cast<int>(std::floor(bound + kTieEps));
  }
  return caps;
}

CategoryStructure categories_from_support(const UtilityMatrix& latent) {
  std::vector<std::vector<int>> sets(latent.attrs());
  for (int i = 0; i < latent.items(); ++i)
    for (int j = 0; j < latent.attrs(); ++j)
      if (latent(i, j) > 0.0) sets[j].push_back(i);
  return CategoryStructure::from_members(std::move(sets));
}

}  // namespace biasmax
