#include "ringlab/catalog.hpp"

namespace ringlab {

CatalogEntry::CatalogEntry(std::string recipe, std::string group)
    : recipe_(std::move(recipe)), group_(std::move(group)) {}

const RingValue& CatalogEntry::value() const {
  std::call_once(built_, [&] { value_ = build_ring(recipe_); });
  return value_;
}

const PropertyResult& CatalogEntry::property(Property p) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(p); it != cache_.end()) return *it->second;
  }
  const RingValue& v = value();
  PropertyResult r = v.finite ? check(*v.finite, p)
                     : v.free ? check(*v.free, p)
                              : undecided(p, recipe_ + " is not enumerable");
  std::lock_guard lock(cache_mutex_);
  auto& slot = cache_[p];
  if (!slot) slot = std::make_unique<PropertyResult>(std::move(r));
  return *slot;
}

const std::vector<std::string>& catalog_bases() {
  static const std::vector<std::string> bases = {
      "Zmod(2)", "Zmod(3)", "Zmod(4)", "Zmod(6)", "Zmod(8)", "Zmod(9)", "Zmod(12)", "Zmod(16)",
      "Fp(2)",   "Fp(3)",   "Fp(5)",   "Product(Fp(2),Fp(2))", "Product(Zmod(2),Zmod(3))", "Product(Fp(2),Fp(3))",
  };
  return bases;
}

namespace {

std::vector<std::pair<std::string, std::string>> standard_recipes() {
  std::vector<std::pair<std::string, std::string>> r;
  for (const auto& b : catalog_bases()) r.emplace_back(b, "base");
  for (const auto& b : catalog_bases()) r.emplace_back("T(2," + b + ")", "triangular");
  for (const char* b : {"Zmod(2)", "Zmod(3)", "Zmod(4)", "Fp(2)", "Fp(3)", "Product(Fp(2),Fp(2))"})
    r.emplace_back(std::string("T(3,") + b + ")", "triangular");
  r.emplace_back("T(2,T(2,Fp(2)))", "triangular");
  for (const char* s : {"DiagConst(2,Fp(2))", "DiagConst(3,Fp(2))", "DiagConst(4,Fp(2))", "DiagConst(4,Fp(3))"})
    r.emplace_back(s, "diagconst");
  for (const auto& b : catalog_bases()) r.emplace_back("TrivExt(" + b + ")", "trivext");
  for (const char* b : {"Zmod(2)", "Zmod(3)", "Zmod(4)", "Zmod(6)", "Zmod(8)", "Fp(2)", "Fp(3)", "Fp(5)",
                        "Product(Fp(2),Fp(2))", "Product(Fp(2),Fp(3))"})
    r.emplace_back(std::string("TrivExt(TrivExt(") + b + "))", "trivext");
  r.emplace_back("TrivExt(T(2,Fp(2)))", "trivext");
  for (const char* s : {"ZeroAlg(2,1)", "ZeroAlg(2,2)", "ZeroAlg(3,1)"}) r.emplace_back(s, "zeroalg");
  for (const char* s : {"Dorroh(ZeroAlg(2,1),2)", "Dorroh(ZeroAlg(2,2),2)", "Dorroh(ZeroAlg(3,1),3)", "Dorroh(Fp(2),2)",
                        "Dorroh(Zmod(6),6)", "Dorroh(T(2,Fp(2)),2)", "Dorroh(Product(Fp(2),Fp(2)),2)"})
    r.emplace_back(s, "dorroh");
  r.emplace_back("M(2,Fp(2))", "matrix");
  r.emplace_back("M(2,Fp(3))", "matrix");
  for (const char* s : {"Quot(Zmod(8),\"4\")", "Quot(Zmod(12),\"6\")", "Quot(T(2,Zmod(4)),\"[[2,0],[0,2]]\")",
                        "Quot(T(2,Fp(2)),\"[[0,1],[0,0]]\")"})
    r.emplace_back(s, "quotient");
  r.emplace_back("CongrSubring(16)", "congruence");
  r.emplace_back("FreeQuot(2,\"xyz\",\"factor:xy\",6)", "free");
  r.emplace_back("FreeQuot(2,\"xy\",\"square:xx\",6)", "free");
  r.emplace_back("FreeQuot(2,\"a0,a1,a2,b0,b1,b2,c\",\"z2a\",6)", "free");
  r.emplace_back("Quat()", "rational");
  r.emplace_back("TrivExt(Quat())", "rational");
  r.emplace_back("TrivExt(TrivExt(Quat()))", "rational");
  for (const char* s : {"Skew(Product(Fp(2),Fp(2)),\"swap\")", "Skew(Product(Fp(2),Fp(2)),\"id\")", "Skew(Zmod(4),\"id\")",
                        "Skew(Fp(2),\"id\")", "Skew(Fp(3),\"id\")", "Skew(Product(Fp(2),Fp(3)),\"id\")",
                        "Skew(Zmod(9),\"id\")", "Skew(T(2,Fp(2)),\"id\")", "Skew(T(2,Fp(2)),\"conj:[[1,1],[0,1]]\")"})
    r.emplace_back(s, "skew");
  return r;
}

}  // namespace

Catalog::Catalog(const std::vector<std::pair<std::string, std::string>>& recipes) {
  for (const auto& [recipe, group] : recipes) entries_.emplace_back(recipe, group);
}

const Catalog& Catalog::standard() {
  static const Catalog c(standard_recipes());
  return c;
}

std::vector<const CatalogEntry*> Catalog::finite(std::size_t max_size) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.finite() && e.finite()->size() <= max_size) out.push_back(&e);
  return out;
}

std::vector<const CatalogEntry*> Catalog::group(std::string_view name) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.group() == name) out.push_back(&e);
  return out;
}

const CatalogEntry* Catalog::find(std::string_view recipe) const {
  for (const auto& e : entries_)
    if (e.recipe() == recipe) return &e;
  return nullptr;
}

}  // namespace ringlab
