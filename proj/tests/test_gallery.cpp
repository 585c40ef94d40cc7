#include <doctest.h>

#include "lubkit/errors.hpp"
#include "lubkit/gallery.hpp"

using namespace lubkit;

namespace {

void require_ok(const GalleryReport& r) {
  for (const GalleryCheck& c : r.checks) {
    INFO(r.id << ": " << c.name << " " << c.detail);
    CHECK(c.pass);
  }
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("g1 five-element example") {
  GalleryReport r = run_gallery("g1");
  require_ok(r);
  CHECK(r.bound == 0);
  CHECK(r.certificate.contains("sazonov"));
  CHECK(r.certificate.contains("canonical"));
  REQUIRE(r.errata.size() == 1);
  CHECK(r.errata[0].find("{c,d}") != std::string::npos);
}

TEST_CASE("g2 curry counterexample") {
  for (std::size_t n : {1u, 2u, 5u, 64u}) {
    GalleryReport r = run_gallery("g2", n);
    require_ok(r);
    CHECK(r.certificate["witness"].size() == 2 * n);
  }
  GalleryReport r = run_gallery("g2", 3);
  REQUIRE(r.errata.size() == 1);
  CHECK(r.errata[0].find("not monotone") != std::string::npos);
}

TEST_CASE("g2 certificate replay rejects tampering") {
  const nlohmann::json good = run_gallery("g2", 6).certificate;
  CHECK(verify_g2_certificate(good));

  nlohmann::json wrong = good;
  wrong["witness"][3]["eval"] = "b'_2";
  CHECK_FALSE(verify_g2_certificate(wrong));

  nlohmann::json gap = good;
  gap["witness"].erase(gap["witness"].begin() + 5);  // (bar d_3, b_3)
  CHECK_FALSE(verify_g2_certificate(gap));

  nlohmann::json stray = good;
  stray["witness"][0]["index"] = 9;
  CHECK_FALSE(verify_g2_certificate(stray));
  CHECK_FALSE(verify_g2_certificate(nlohmann::json::object()));
}

TEST_CASE("g3 derivation") {
  for (std::size_t n : {1u, 4u, 64u}) {
    GalleryReport r = run_gallery("g3", n);
    require_ok(r);
    CHECK(r.certificate["nodes"].size() == 5);
  }
}

TEST_CASE("g4 level closure") {
  for (std::size_t n : {1u, 3u, 16u}) {
    GalleryReport r = run_gallery("g4", n);
    require_ok(r);
    CHECK(r.out_of_scope.size() == 1);
  }
}

TEST_CASE("gallery errors and json") {
  CHECK_THROWS_AS(run_gallery("g9"), Error);
  CHECK_THROWS_AS(run_gallery("g2", 0), BoundExceeded);
  CHECK_THROWS_AS(run_gallery("g2", 100000), BoundExceeded);
  CHECK_THROWS_AS(run_gallery("g4", 2000), BoundExceeded);
  nlohmann::json j = gallery_json(run_gallery("g3", 8));
  CHECK(j["ok"] == true);
  CHECK(j["bound"] == 8);
  CHECK(j["checks"].size() == 4);
}
