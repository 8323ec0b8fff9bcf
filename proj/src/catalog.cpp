#include "qham/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qham/cone.hpp"

namespace qham {

namespace {

using nlohmann::json;

[[noreturn]] void bad_entry(const std::string& name, const std::string& what) {
  throw std::invalid_argument("catalog entry \"" + name + "\": " + what);
}

LeviComponent parse_component(const json& j, const std::string& name) {
  if (!j.is_object()) bad_entry(name, "levi component must be an object");
  LeviComponent c;
  if (!j.contains("family") || !j["family"].is_string())
    bad_entry(name, "levi component needs a \"family\" string");
  c.family = j["family"].get<std::string>();
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    bad_entry(name, "levi component needs an integer \"rank\"");
  c.rank = j["rank"].get<int>();
  if (c.rank <= 0) bad_entry(name, "levi component rank must be positive");
  if (j.contains("invariants")) {
    if (!j["invariants"].is_array())
      bad_entry(name, "\"invariants\" must be an array of integers");
    for (const auto& v : j["invariants"]) {
      if (!v.is_number_integer())
        bad_entry(name, "\"invariants\" must be an array of integers");
      c.invariants.push_back(Int(v.get<long long>()));
    }
  }
  return c;
}

IMat parse_int_rows(const json& j, int width, const std::string& name,
                    const std::string& field, bool nonneg) {
  if (!j.is_array()) bad_entry(name, "\"" + field + "\" must be an array of rows");
  IMat rows;
  for (const auto& r : j) {
    if (!r.is_array() || static_cast<int>(r.size()) != width)
      bad_entry(name, "\"" + field + "\" rows must have length " +
                          std::to_string(width));
    IVec row;
    for (const auto& v : r) {
      if (!v.is_number_integer())
        bad_entry(name, "\"" + field + "\" entries must be integers");
      Int x(v.get<long long>());
      if (nonneg && x < 0)
        bad_entry(name, "\"" + field + "\" entries must be nonnegative");
      row.push_back(x);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// The basis must be the Hilbert basis of the saturated monoid it generates:
// recompute monoid generators of cone(basis) ∩ Z-span(basis) and compare as
// sorted sets.
void check_saturated(const CatalogEntry& e) {
  const int width = static_cast<int>(e.basis.front().size());
  QMat gens;
  for (const auto& row : e.basis) gens.push_back(to_q(row));
  Lattice span = Lattice::from_generators(width, gens);
  std::vector<QVec> hb = monoid_generators(gens, span);
  QMat expect = gens;
  std::sort(expect.begin(), expect.end());
  std::sort(hb.begin(), hb.end());
  if (QMat(hb.begin(), hb.end()) != expect)
    bad_entry(e.name,
              "basis is not the Hilbert basis of the saturated monoid it "
              "generates");
}

}  // namespace

bool levi_component_less(const LeviComponent& a, const LeviComponent& b) {
  if (a.family != b.family) return a.family < b.family;
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.invariants < b.invariants;
}

LocalModelCatalog LocalModelCatalog::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("catalog JSON parse error: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw std::invalid_argument("catalog document needs an \"entries\" array");

  LocalModelCatalog cat;
  for (const auto& je : doc["entries"]) {
    if (!je.is_object() || !je.contains("name") || !je["name"].is_string())
      throw std::invalid_argument("catalog entry needs a \"name\" string");
    CatalogEntry e;
    e.name = je["name"].get<std::string>();
    if (!je.contains("levi") || !je["levi"].is_array() || je["levi"].empty())
      bad_entry(e.name, "needs a nonempty \"levi\" component array");
    for (const auto& jc : je["levi"]) e.levi.push_back(parse_component(jc, e.name));
    const int width = std::accumulate(
        e.levi.begin(), e.levi.end(), 0,
        [](int acc, const LeviComponent& c) { return acc + c.rank; });
    if (!je.contains("basis")) bad_entry(e.name, "needs a \"basis\"");
    e.basis = parse_int_rows(je["basis"], width, e.name, "basis", true);
    if (e.basis.empty()) bad_entry(e.name, "basis must be nonempty");
    if (je.contains("spherical_roots"))
      e.spherical_roots = parse_int_rows(je["spherical_roots"], width, e.name,
                                         "spherical_roots", true);
    for (const auto& row : e.spherical_roots)
      if (std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; }))
        bad_entry(e.name, "spherical_roots rows must be nonzero");
    if (je.contains("note")) {
      if (!je["note"].is_string()) bad_entry(e.name, "\"note\" must be a string");
      e.note = je["note"].get<std::string>();
    }

    // Normalize: sort components canonically and permute column blocks along.
    std::vector<int> order(e.levi.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return levi_component_less(e.levi[a], e.levi[b]);
    });
    std::vector<int> offset(e.levi.size() + 1, 0);
    for (size_t i = 0; i < e.levi.size(); ++i)
      offset[i + 1] = offset[i] + e.levi[i].rank;
    auto permute_rows = [&](IMat& rows) {
      for (auto& row : rows) {
        IVec out;
        out.reserve(row.size());
        for (int i : order)
          for (int t = offset[i]; t < offset[i + 1]; ++t) out.push_back(row[t]);
        row = std::move(out);
      }
    };
    permute_rows(e.basis);
    permute_rows(e.spherical_roots);
    std::vector<LeviComponent> sorted;
    sorted.reserve(e.levi.size());
    for (int i : order) sorted.push_back(std::move(e.levi[i]));
    e.levi = std::move(sorted);

    check_saturated(e);
    for (const auto& prev : cat.entries_)
      if (prev.name == e.name) bad_entry(e.name, "duplicate entry name");
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

LocalModelCatalog LocalModelCatalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

extern const char* const kDefaultCatalogJson;

const LocalModelCatalog& LocalModelCatalog::bundled() {
  static const LocalModelCatalog cat = from_json_text(kDefaultCatalogJson);
  return cat;
}

LocalModelCatalog LocalModelCatalog::load_default() {
  if (const char* path = std::getenv("QHAM_CATALOG")) return from_file(path);
  return bundled();
}

std::vector<int> LocalModelCatalog::entries_for(
    const std::vector<LeviComponent>& levi) const {
  std::vector<int> out;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].levi == levi) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<int>> gcm_automorphisms(const IMat& gcm) {
  const int n = static_cast<int>(gcm.size());
  std::vector<std::vector<int>> found;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int pos, int cand) {
    for (int j = 0; j < pos; ++j)
      if (gcm[cand][perm[j]] != gcm[pos][j] || gcm[perm[j]][cand] != gcm[j][pos])
        return false;
    return gcm[cand][cand] == gcm[pos][pos];
  };
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      found.push_back(perm);
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || !consistent(pos, cand)) continue;
      perm[pos] = cand;
      used[cand] = true;
      self(self, pos + 1);
      used[cand] = false;
      perm[pos] = -1;
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace qham
