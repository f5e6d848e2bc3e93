#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <unistd.h>

#include <hilbcenter/characters.hpp>
#include <hilbcenter/errors.hpp>

using namespace hilbcenter;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hilbcenter-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("small character values") {
  // frozen by hand from the border-strip recursion
  CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_character(Partition({3}), Partition({3})) == 1);
  CHECK(mn_character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
  CHECK(mn_character(Partition({1, 1, 1}), Partition({3})) == 1);
  CHECK(mn_character(Partition{}, Partition{}) == 1);
  // sign character on a transposition-rich class
  CHECK(mn_character(Partition(std::vector<int>(4, 1)),
                     Partition({2, 1, 1})) == -1);
  CHECK_THROWS_AS(mn_character(Partition({2}), Partition({3})), InputError);
}

TEST_CASE("trivial and sign rows") {
  for (int n = 1; n <= 8; ++n) {
    Partition trivial({n});
    Partition sign(std::vector<int>(n, 1));
    for (const Partition& mu : enumerate_partitions(n)) {
      CHECK(mn_character(trivial, mu) == 1);
      int transpositions = mu.weight() - mu.length();
      CHECK(mn_character(sign, mu) == (transpositions % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("row orthogonality with centralizer weights") {
  for (int n = 1; n <= 8; ++n) {
    CharacterTable t = compute_character_table(n);
    std::size_t count = t.labels.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        Rat sum = 0;
        for (std::size_t k = 0; k < count; ++k)
          sum += make_rat(t.values[i][k] * t.values[j][k],
                          t.labels[k].centralizer_order());
        INFO("n = " << n << ", rows " << i << " and " << j);
        CHECK(sum == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("column orthogonality") {
  CharacterTable t = compute_character_table(7);
  std::size_t count = t.labels.size();
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      Int sum = 0;
      for (std::size_t k = 0; k < count; ++k)
        sum += t.values[k][a] * t.values[k][b];
      CHECK(sum == (a == b ? t.labels[a].centralizer_order() : Int(0)));
    }
}

TEST_CASE("dimensions match the hook formula") {
  for (int n = 1; n <= 10; ++n) {
    Partition ones(std::vector<int>(n, 1));
    Int nf = factorial(n);
    for (const Partition& lambda : enumerate_partitions(n)) {
      INFO("n = " << n << ", shape " << lambda.to_text());
      CHECK(mn_character(lambda, ones) == nf / lambda.hook_product());
    }
  }
}

TEST_CASE("n = 3 table by class label") {
  CharacterTable t = compute_character_table(3);
  // (2,1) row: dimension 2, zero on transpositions, -1 on 3-cycles
  CHECK(t.value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(t.value(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(t.value(Partition({2, 1}), Partition({3})) == -1);
}

TEST_CASE("n = 0 table is the 1x1 identity") {
  CharacterTable t = compute_character_table(0);
  REQUIRE(t.labels.size() == 1);
  CHECK(t.values[0][0] == 1);
}

TEST_CASE("serialization round trip preserves the checksum") {
  CharacterTable t = compute_character_table(5);
  Json doc = t.to_json();
  CharacterTable back = CharacterTable::from_json(doc);
  CHECK(back.n == 5);
  CHECK(back.values == t.values);
  CHECK(back.checksum() == t.checksum());
}

TEST_CASE("corrupt documents are rejected as cache errors") {
  CharacterTable t = compute_character_table(4);
  Json doc = t.to_json();

  Json tampered = doc;
  tampered["values"][1][2] = "7";
  CHECK_THROWS_AS(CharacterTable::from_json(tampered), CacheError);

  tampered = doc;
  tampered["checksum"] = "0000000000000000";
  CHECK_THROWS_AS(CharacterTable::from_json(tampered), CacheError);

  tampered = doc;
  tampered["format"] = "something-else";
  CHECK_THROWS_AS(CharacterTable::from_json(tampered), CacheError);

  tampered = doc;
  tampered["values"][0][0] = "not-a-number";
  CHECK_THROWS_AS(CharacterTable::from_json(tampered), CacheError);

  tampered = doc;
  tampered.erase("values");
  CHECK_THROWS_AS(CharacterTable::from_json(tampered), CacheError);
}

TEST_CASE("table store caches to disk and reloads") {
  TempDir dir;
  {
    TableStore store(dir.path, 10);
    const CharacterTable& t = store.get(4);
    CHECK(t.n == 4);
    CHECK(std::filesystem::exists(dir.path / TableStore::cache_name(4)));
    // second call: memory hit, same object
    CHECK(&store.get(4) == &t);
  }
  {
    // fresh store reads the disk entry
    TableStore store(dir.path, 10);
    const CharacterTable& t = store.get(4);
    CHECK(t.values == compute_character_table(4).values);
  }
}

TEST_CASE("table store surfaces corruption instead of recomputing") {
  TempDir dir;
  {
    TableStore store(dir.path, 10);
    store.get(3);
  }
  // flip one byte in the stored file
  std::filesystem::path file = dir.path / TableStore::cache_name(3);
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto pos = text.find("\"2\"");
  REQUIRE(pos != std::string::npos);
  text[pos + 1] = '7';
  {
    std::ofstream out(file, std::ios::trunc);
    out << text;
  }
  TableStore store(dir.path, 10);
  CHECK_THROWS_AS(store.get(3), CacheError);

  // unreadable JSON too
  {
    std::ofstream out(file, std::ios::trunc);
    out << "{ braces";
  }
  TableStore store2(dir.path, 10);
  CHECK_THROWS_AS(store2.get(3), CacheError);
}

TEST_CASE("table store respects the n cap") {
  TableStore store(5);
  CHECK_THROWS_AS(store.get(6), CapError);
  CHECK(store.get(5).n == 5);
}

TEST_CASE("disk bypass leaves no files") {
  TempDir dir;
  TableStore store(dir.path, 10, false);
  store.get(4);
  CHECK(!std::filesystem::exists(dir.path / TableStore::cache_name(4)));
}
