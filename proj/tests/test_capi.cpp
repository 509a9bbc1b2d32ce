// Exercises the shared-library C surface end to end.
#include <doctest.h>

#include <cstring>
#include <string>

#include "a4ssl.h"

TEST_CASE("count table") {
    a4ssl_table* table = nullptr;
    REQUIRE(a4ssl_count_table(36, 1, &table) == A4SSL_OK);
    CHECK(a4ssl_table_rows(table) == 12);
    a4ssl_count_row row{};
    CHECK(a4ssl_table_row(table, 0, &row) == A4SSL_OK);
    CHECK(row.m == 1);
    CHECK(row.f == 1);
    CHECK(a4ssl_table_row(table, 11, &row) == A4SSL_OK);
    CHECK(row.m == 36);
    CHECK(row.m_squared == 1296);
    CHECK(row.f == 66);
    CHECK(row.f_pr == 50);
    CHECK(a4ssl_table_row(table, 12, &row) == A4SSL_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(a4ssl_last_error()) > 0);
    a4ssl_table_free(table);

    CHECK(a4ssl_count_table(0, 0, &table) == A4SSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("enumeration handles") {
    a4ssl_ssl_list* list = nullptr;
    REQUIRE(a4ssl_enumerate(4, 0, 0, &list) == A4SSL_OK);
    CHECK(a4ssl_ssl_list_size(list) == 6);
    int scaled = 0, with_generator = 0;
    for (uint64_t idx = 0; idx < a4ssl_ssl_list_size(list); ++idx) {
        a4ssl_ssl_record rec{};
        REQUIRE(a4ssl_ssl_list_get(list, idx, &rec) == A4SSL_OK);
        CHECK(rec.m == 4);
        CHECK(rec.index == 16);
        if (rec.scale == 2) ++scaled;
        if (rec.has_generator) ++with_generator;
    }
    CHECK(scaled == 1);
    CHECK(with_generator == 5);
    a4ssl_ssl_list_free(list);

    REQUIRE(a4ssl_enumerate(2, 0, 0, &list) == A4SSL_OK);
    CHECK(a4ssl_ssl_list_size(list) == 0);
    a4ssl_ssl_list_free(list);

    CHECK(a4ssl_enumerate(100, 0, 0, &list) == A4SSL_ERR_BUDGET_EXCEEDED);
}

TEST_CASE("matrix verification") {
    int64_t two_l[16] = {2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2};
    int ok = 0, primitive = 0;
    char reason[64];
    REQUIRE(a4ssl_verify_matrix(two_l, 4, 0, &ok, &primitive, reason) == A4SSL_OK);
    CHECK(ok == 1);
    CHECK(primitive == 0);

    two_l[1] = 1;  // corrupt one entry
    REQUIRE(a4ssl_verify_matrix(two_l, 4, 0, &ok, &primitive, reason) == A4SSL_OK);
    CHECK(ok == 0);
}

TEST_CASE("three way verification") {
    a4ssl_verify_report rep{};
    REQUIRE(a4ssl_verify_index(4, 1, &rep) == A4SSL_OK);
    CHECK(rep.pass == 1);
    CHECK(rep.oracle_ran == 1);
    CHECK(rep.f_closed == 6);
    CHECK(rep.f_oracle == 6);

    REQUIRE(a4ssl_verify_index(11, 1, &rep) == A4SSL_OK);
    CHECK(rep.pass == 1);
    CHECK(rep.oracle_ran == 0);  // index 121 is over the default oracle budget
    CHECK(rep.f_closed == 24);
    CHECK(rep.f_enumerated == 24);
}

TEST_CASE("roots") {
    a4ssl_roots* roots = nullptr;
    REQUIRE(a4ssl_roots_create("h4", &roots) == A4SSL_OK);
    CHECK(a4ssl_roots_size(roots) == 120);
    a4ssl_quat q{};
    CHECK(a4ssl_roots_get(roots, 0, &q) == A4SSL_OK);
    a4ssl_roots_free(roots);

    REQUIRE(a4ssl_roots_create("a4", &roots) == A4SSL_OK);
    CHECK(a4ssl_roots_size(roots) == 20);
    a4ssl_roots_free(roots);

    REQUIRE(a4ssl_roots_create("h3", &roots) == A4SSL_OK);
    CHECK(a4ssl_roots_size(roots) == 30);
    a4ssl_roots_free(roots);

    CHECK(a4ssl_roots_create("e8", &roots) == A4SSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("twist report") {
    a4ssl_twists* tw = nullptr;
    REQUIRE(a4ssl_twists_create(&tw) == A4SSL_OK);
    a4ssl_twists_summary s{};
    REQUIRE(a4ssl_twists_summary_get(tw, &s) == A4SSL_OK);
    CHECK(s.map_count == 10);
    CHECK(s.group_order == 120);
    CHECK(s.has_order_four_element == 1);
    CHECK(s.z_cubed_is_minus_one == 1);
    CHECK(s.orbit_size == 60);
    CHECK(s.copies_containing_one == 10);
    CHECK(s.theta_six_to_one == 1);
    CHECK(s.fixed_lattices_are_a4 == 1);
    CHECK(s.a2_cover_ok == 1);
    a4ssl_quat root{}, wit{};
    CHECK(a4ssl_twists_root(tw, 9, &root, &wit) == A4SSL_OK);
    CHECK(a4ssl_twists_root(tw, 10, &root, &wit) == A4SSL_ERR_INVALID_ARGUMENT);
    a4ssl_twists_free(tw);
}

TEST_CASE("asymptotics and possible indices") {
    char rho[80];
    REQUIRE(a4ssl_rho(6, rho, sizeof(rho)) == A4SSL_OK);
    CHECK(std::string(rho) == "0.538011");

    int64_t f1 = 0;
    REQUIRE(a4ssl_summatory(1, &f1) == A4SSL_OK);
    CHECK(f1 == 1);

    a4ssl_asymptotics rep{};
    REQUIRE(a4ssl_asymptotics_get(1000, 12, &rep) == A4SSL_OK);
    CHECK(rep.within_5_percent == 1);

    uint64_t idx[12];
    uint64_t count = 0;
    REQUIRE(a4ssl_possible_indices(36, idx, 12, &count) == A4SSL_OK);
    CHECK(count == 12);
    CHECK(idx[0] == 1);
    CHECK(idx[11] == 36);
}

TEST_CASE("series and oracle") {
    int64_t values[14];
    REQUIRE(a4ssl_series("a2", 13, values) == A4SSL_OK);
    CHECK(values[1] == 1);
    CHECK(values[7] == 2);
    CHECK(a4ssl_series("e8", 13, values) == A4SSL_ERR_INVALID_ARGUMENT);

    a4ssl_oracle_result res{};
    REQUIRE(a4ssl_oracle_count("a4", nullptr, 16, 0, &res) == A4SSL_OK);
    CHECK(res.total == 6);
    CHECK(res.primitive == 5);

    const char* gram = "[[2, -1], [-1, 2]]";
    REQUIRE(a4ssl_oracle_count(nullptr, gram, 7, 0, &res) == A4SSL_OK);
    CHECK(res.total == 2);

    const char* gram_frac = "[[\"1/2\", 0], [0, \"1/2\"]]";
    REQUIRE(a4ssl_oracle_count(nullptr, gram_frac, 5, 0, &res) == A4SSL_OK);
    CHECK(res.total == 2);  // scaled square lattice, Gaussian ideal count

    CHECK(a4ssl_oracle_count("a4", nullptr, 10000, 0, &res) == A4SSL_ERR_BUDGET_EXCEEDED);
    CHECK(a4ssl_oracle_count(nullptr, nullptr, 4, 0, &res) == A4SSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("status names") {
    CHECK(std::string(a4ssl_status_name(A4SSL_OK)) == "ok");
    CHECK(std::string(a4ssl_status_name(A4SSL_ERR_BUDGET_EXCEEDED)) == "budget exceeded");
    CHECK(std::string(a4ssl_version()).size() > 0);
}
