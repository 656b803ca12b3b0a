#include "gradedq/chart.hpp"

#include <set>

namespace gradedq {

Chart::Chart(int n, std::vector<Gen> gens) : n_(n), gens_(std::move(gens)) {
  if (n < 0) throw Error("Chart: negative dimension");
  std::set<std::string> seen;
  for (int i = 1; i <= n; ++i) {
    base_names_.push_back("x" + std::to_string(i));
    seen.insert(base_names_.back());
  }
  for (auto& g : gens_) {
    if (!seen.insert(g.name).second) throw Error("Chart: duplicate generator name " + g.name);
  }
}

int Chart::find(const std::string& name) const {
  for (int i = 0; i < ngens(); ++i)
    if (gens_[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

bool Chart::operator==(const Chart& o) const {
  if (n_ != o.n_ || gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree) return false;
  return true;
}

ChartPtr courant_chart(int n) {
  std::vector<Chart::Gen> g;
  for (int i = 1; i <= n; ++i) g.push_back({"psi" + std::to_string(i), 1});
  for (int i = 1; i <= n; ++i) g.push_back({"b" + std::to_string(i), 1});
  for (int i = 1; i <= n; ++i) g.push_back({"p" + std::to_string(i), 2});
  return make_chart(n, std::move(g));
}

ChartPtr courant_chart_with_fibre(int n, int rank, int sdeg,
                                  const std::vector<std::string>& snames) {
  if (static_cast<int>(snames.size()) != rank) throw Error("fibre name count mismatch");
  std::vector<Chart::Gen> g;
  for (int i = 1; i <= n; ++i) g.push_back({"psi" + std::to_string(i), 1});
  for (int i = 1; i <= n; ++i) g.push_back({"b" + std::to_string(i), 1});
  for (int i = 1; i <= n; ++i) g.push_back({"p" + std::to_string(i), 2});
  for (auto& s : snames) g.push_back({s, sdeg});
  return make_chart(n, std::move(g));
}

std::vector<std::string> tm_fibre_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("su" + std::to_string(i));
  return names;
}

ChartPtr algebroid_chart(int n, int rank) {
  std::vector<Chart::Gen> g;
  for (int i = 1; i <= rank; ++i) g.push_back({"xi" + std::to_string(i), 1});
  return make_chart(n, std::move(g));
}

}  // namespace gradedq
