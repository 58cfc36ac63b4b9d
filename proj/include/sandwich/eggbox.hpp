#ifndef SANDWICH_EGGBOX_HPP_
#define SANDWICH_EGGBOX_HPP_

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "transformation.hpp"

namespace sandwich {

// One D-class of an egg-box diagram: a rows x cols grid of H-classes of a
// common size, with a group flag per cell.
struct egg_box_dclass {
  int rank = 0;
  std::string case_tag;  // "regular" | "R" | "L" | "singleton"
  int rows = 0;
  int cols = 0;
  long long h_size = 0;
  std::vector<std::vector<bool>> groups;  // rows x cols

  friend bool operator==(egg_box_dclass const& a, egg_box_dclass const& b) {
    return a.rank == b.rank && a.case_tag == b.case_tag && a.rows == b.rows &&
           a.cols == b.cols && a.h_size == b.h_size && a.groups == b.groups;
  }
};

struct egg_box_layout {
  int n = 0;
  std::vector<int> sandwich;  // 1-indexed images of the sandwich element
  std::string semigroup;      // "variant" | "reg" | "exa" | "ideal:m" | "tn"
  std::vector<egg_box_dclass> dclasses;            // rank ascending
  std::vector<std::pair<int, int>> dorder;         // covering edges (lower, upper)

  friend bool operator==(egg_box_layout const& a, egg_box_layout const& b) {
    return a.n == b.n && a.sandwich == b.sandwich && a.semigroup == b.semigroup &&
           a.dclasses == b.dclasses && a.dorder == b.dorder;
  }
};

namespace detail {
inline int case_order(std::string const& tag) {
  if (tag == "regular") return 0;
  if (tag == "R") return 1;
  if (tag == "L") return 2;
  return 3;  // singleton
}
}  // namespace detail

// Builds the egg-box layout of a table of transformations.  Within a
// D-class, rows are ordered by the canonical kernel of their representative
// and columns by the canonical image; D-classes are ordered by (rank
// ascending, case tag, first element).
inline egg_box_layout build_egg_box(semigroup_table<transformation> const& table,
                                    int n, std::vector<int> sandwich,
                                    std::string semigroup) {
  green_data const& g = table.greens();
  egg_box_layout layout;
  layout.n = n;
  layout.sandwich = std::move(sandwich);
  layout.semigroup = std::move(semigroup);

  struct class_info {
    int d_id;
    int rank;
    std::string case_tag;
    std::size_t first_element;
  };
  std::vector<class_info> infos;
  for (int d = 0; d < g.n_d_classes; ++d) {
    auto const& members = g.d_class_members[d];
    class_info info;
    info.d_id = d;
    info.first_element = members.front();
    info.rank = table.element(members.front()).rank();
    std::vector<char> rows_seen(static_cast<std::size_t>(g.n_r_classes), 0);
    std::vector<char> cols_seen(static_cast<std::size_t>(g.n_l_classes), 0);
    int rows = 0, cols = 0;
    for (std::size_t x : members) {
      if (!rows_seen[g.r_class_of[x]]) {
        rows_seen[g.r_class_of[x]] = 1;
        ++rows;
      }
      if (!cols_seen[g.l_class_of[x]]) {
        cols_seen[g.l_class_of[x]] = 1;
        ++cols;
      }
    }
    if (g.d_class_is_regular(d)) {
      info.case_tag = "regular";
    } else if (members.size() == 1) {
      info.case_tag = "singleton";
    } else if (rows == 1) {
      info.case_tag = "R";  // the class is a single R-class
    } else {
      info.case_tag = "L";
    }
    infos.push_back(info);
  }
  std::sort(infos.begin(), infos.end(), [](class_info const& a, class_info const& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    int ca = detail::case_order(a.case_tag), cb = detail::case_order(b.case_tag);
    if (ca != cb) return ca < cb;
    return a.first_element < b.first_element;
  });

  std::vector<int> layout_index_of_d(static_cast<std::size_t>(g.n_d_classes));
  for (std::size_t i = 0; i < infos.size(); ++i) {
    layout_index_of_d[infos[i].d_id] = static_cast<int>(i);
  }

  for (class_info const& info : infos) {
    auto const& members = g.d_class_members[info.d_id];
    // order rows by canonical kernel, columns by canonical image
    std::vector<int> r_ids, l_ids;
    {
      std::map<int, std::vector<std::vector<point>>> row_key;
      std::map<int, std::vector<point>> col_key;
      for (std::size_t x : members) {
        row_key.try_emplace(g.r_class_of[x], kernel(table.element(x)).blocks());
        col_key.try_emplace(g.l_class_of[x], table.element(x).image_set());
      }
      std::vector<std::pair<std::vector<std::vector<point>>, int>> rows_sorted;
      std::vector<std::pair<std::vector<point>, int>> cols_sorted;
      for (auto const& [id, key] : row_key) rows_sorted.emplace_back(key, id);
      for (auto const& [id, key] : col_key) cols_sorted.emplace_back(key, id);
      std::sort(rows_sorted.begin(), rows_sorted.end());
      std::sort(cols_sorted.begin(), cols_sorted.end());
      for (auto const& [key, id] : rows_sorted) {
        (void)key;
        r_ids.push_back(id);
      }
      for (auto const& [key, id] : cols_sorted) {
        (void)key;
        l_ids.push_back(id);
      }
    }
    egg_box_dclass dc;
    dc.rank = info.rank;
    dc.case_tag = info.case_tag;
    dc.rows = static_cast<int>(r_ids.size());
    dc.cols = static_cast<int>(l_ids.size());
    dc.groups.assign(static_cast<std::size_t>(dc.rows),
                     std::vector<bool>(static_cast<std::size_t>(dc.cols), false));
    std::vector<std::vector<long long>> cell_size(
        static_cast<std::size_t>(dc.rows),
        std::vector<long long>(static_cast<std::size_t>(dc.cols), 0));
    std::map<int, int> row_index, col_index;
    for (std::size_t i = 0; i < r_ids.size(); ++i) row_index[r_ids[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < l_ids.size(); ++i) col_index[l_ids[i]] = static_cast<int>(i);
    for (std::size_t x : members) {
      int const row = row_index.at(g.r_class_of[x]);
      int const col = col_index.at(g.l_class_of[x]);
      ++cell_size[row][col];
      if (g.h_class_is_group[g.h_class_of[x]]) {
        dc.groups[row][col] = true;
      }
    }
    dc.h_size = cell_size[0][0];
    for (auto const& row : cell_size) {
      for (long long sz : row) {
        if (sz == 0) {
          throw std::logic_error("egg box: D-class grid has an empty cell");
        }
        if (sz != dc.h_size) {
          throw std::logic_error("egg box: H-class sizes differ within a D-class");
        }
      }
    }
    layout.dclasses.push_back(std::move(dc));
  }

  for (auto const& [lower, upper] : g.d_order_covers()) {
    layout.dorder.emplace_back(layout_index_of_d[lower], layout_index_of_d[upper]);
  }
  std::sort(layout.dorder.begin(), layout.dorder.end());
  return layout;
}

// ASCII rendering: one block per D-class, from the top of the order down.
// Group cells carry the degree of their symmetric group (the class rank),
// non-groups a dot.
inline std::string render_text(egg_box_layout const& layout) {
  if (layout.dclasses.empty()) {
    throw std::invalid_argument("render: empty layout");
  }
  // topological order, maximal classes first
  int const k = static_cast<int>(layout.dclasses.size());
  std::vector<int> above(static_cast<std::size_t>(k), 0);  // # classes directly above
  std::vector<std::vector<int>> below(static_cast<std::size_t>(k));
  for (auto const& [lo, hi] : layout.dorder) {
    ++above[lo];
    below[hi].push_back(lo);
  }
  std::vector<int> order;
  std::vector<int> ready;
  for (int i = k - 1; i >= 0; --i) {
    if (above[i] == 0) {
      ready.push_back(i);
    }
  }
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    int next = ready.front();
    ready.erase(ready.begin());
    order.push_back(next);
    for (int lo : below[next]) {
      if (--above[lo] == 0) {
        ready.push_back(lo);
      }
    }
  }
  std::ostringstream out;
  out << "egg box: semigroup=" << layout.semigroup << " n=" << layout.n
      << " sandwich=[";
  for (std::size_t i = 0; i < layout.sandwich.size(); ++i) {
    out << (i ? "," : "") << layout.sandwich[i];
  }
  out << "]\n";
  for (int idx : order) {
    egg_box_dclass const& dc = layout.dclasses[static_cast<std::size_t>(idx)];
    out << "D" << idx << ": rank=" << dc.rank << " case=" << dc.case_tag << " "
        << dc.rows << "x" << dc.cols << " |H|=" << dc.h_size << "\n";
    for (int row = 0; row < dc.rows; ++row) {
      out << "  |";
      for (int col = 0; col < dc.cols; ++col) {
        if (dc.groups[row][col]) {
          out << dc.rank;
        } else {
          out << '.';
        }
      }
      out << "|\n";
    }
  }
  out << "order:";
  if (layout.dorder.empty()) {
    out << " (none)";
  }
  for (auto const& [lo, hi] : layout.dorder) {
    out << " D" << lo << "<D" << hi;
  }
  out << "\n";
  return out.str();
}

// Graphviz rendering: one HTML-table node per D-class, covering edges drawn
// from the upper class down to the lower.
inline std::string render_dot(egg_box_layout const& layout) {
  if (layout.dclasses.empty()) {
    throw std::invalid_argument("render: empty layout");
  }
  std::ostringstream out;
  out << "digraph eggbox {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < layout.dclasses.size(); ++i) {
    egg_box_dclass const& dc = layout.dclasses[i];
    out << "  d" << i
        << " [label=<<TABLE BORDER=\"1\" CELLBORDER=\"1\" CELLSPACING=\"0\">";
    for (int row = 0; row < dc.rows; ++row) {
      out << "<TR>";
      for (int col = 0; col < dc.cols; ++col) {
        if (dc.groups[row][col]) {
          out << "<TD BGCOLOR=\"grey\">" << dc.rank << "</TD>";
        } else {
          out << "<TD>" << dc.h_size << "</TD>";
        }
      }
      out << "</TR>";
    }
    out << "</TABLE>>];\n";
  }
  for (auto const& [lo, hi] : layout.dorder) {
    out << "  d" << hi << " -> d" << lo << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string render_json(egg_box_layout const& layout) {
  if (layout.dclasses.empty()) {
    throw std::invalid_argument("render: empty layout");
  }
  nlohmann::json j;
  j["n"] = layout.n;
  j["sandwich"] = layout.sandwich;
  j["semigroup"] = layout.semigroup;
  j["dclasses"] = nlohmann::json::array();
  for (egg_box_dclass const& dc : layout.dclasses) {
    nlohmann::json jd;
    jd["rank"] = dc.rank;
    jd["case"] = dc.case_tag;
    jd["rows"] = dc.rows;
    jd["cols"] = dc.cols;
    jd["hsize"] = dc.h_size;
    jd["groups"] = dc.groups;
    j["dclasses"].push_back(std::move(jd));
  }
  j["dorder"] = nlohmann::json::array();
  for (auto const& [lo, hi] : layout.dorder) {
    j["dorder"].push_back(nlohmann::json::array({lo, hi}));
  }
  return j.dump(2) + "\n";
}

inline egg_box_layout parse_egg_box_json(std::string const& text) {
  nlohmann::json const j = nlohmann::json::parse(text);
  egg_box_layout layout;
  layout.n = j.at("n").get<int>();
  layout.sandwich = j.at("sandwich").get<std::vector<int>>();
  layout.semigroup = j.at("semigroup").get<std::string>();
  for (auto const& jd : j.at("dclasses")) {
    egg_box_dclass dc;
    dc.rank = jd.at("rank").get<int>();
    dc.case_tag = jd.at("case").get<std::string>();
    dc.rows = jd.at("rows").get<int>();
    dc.cols = jd.at("cols").get<int>();
    dc.h_size = jd.at("hsize").get<long long>();
    dc.groups = jd.at("groups").get<std::vector<std::vector<bool>>>();
    layout.dclasses.push_back(std::move(dc));
  }
  for (auto const& je : j.at("dorder")) {
    layout.dorder.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
  }
  return layout;
}

enum class egg_box_format { text, dot, json };

inline egg_box_format parse_egg_box_format(std::string const& name) {
  if (name == "text") return egg_box_format::text;
  if (name == "dot") return egg_box_format::dot;
  if (name == "json") return egg_box_format::json;
  throw std::invalid_argument("unknown egg box format: " + name);
}

inline std::string render(egg_box_layout const& layout, egg_box_format format) {
  switch (format) {
    case egg_box_format::text:
      return render_text(layout);
    case egg_box_format::dot:
      return render_dot(layout);
    case egg_box_format::json:
      return render_json(layout);
  }
  throw std::invalid_argument("unknown egg box format");
}

}  // namespace sandwich

#endif  // SANDWICH_EGGBOX_HPP_
