#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pso/csv.hpp"
#include "pso/sociometry.hpp"

#include <sstream>
#include <vector>

using namespace pso;

namespace {

std::vector<LocalSociometrySpec> homogeneous(std::size_t m, NeighbourhoodTopology topo,
                                             bool include_self = true)
{
    return std::vector<LocalSociometrySpec>(m, LocalSociometrySpec{topo, include_self});
}

} // namespace

TEST_CASE("local neighbourhoods")
{
    CHECK(build_local_neighbourhood({RingTopology{1}, true}, 0, 5) ==
          std::vector<std::size_t>{1, 4});
    CHECK(build_local_neighbourhood({GlobalTopology{}, true}, 2, 4) ==
          std::vector<std::size_t>{0, 1, 3});
    CHECK(build_local_neighbourhood({WheelTopology{0}, true}, 3, 5) ==
          std::vector<std::size_t>{0});
    CHECK(build_local_neighbourhood({WheelTopology{0}, true}, 0, 5) ==
          std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(build_local_neighbourhood({ForwardTopology{2}, true}, 3, 5) ==
          std::vector<std::size_t>{0, 4});

    CHECK_THROWS_AS(build_local_neighbourhood({RingTopology{5}, true}, 0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_local_neighbourhood({ForwardTopology{7}, true}, 0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_local_neighbourhood({WheelTopology{9}, true}, 0, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_local_neighbourhood({GlobalTopology{}, true}, 4, 4),
                    std::invalid_argument);
}

TEST_CASE("assembly: homogeneous global is complete")
{
    const auto matrix = assemble_connectivity(homogeneous(3, GlobalTopology{}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(matrix.informs(i, j));
}

TEST_CASE("assembly: one global particle among ring particles")
{
    std::vector<LocalSociometrySpec> specs = homogeneous(5, RingTopology{1}, false);
    specs[0].topology = GlobalTopology{};
    const auto matrix = assemble_connectivity(specs);

    for (std::size_t j = 1; j < 5; ++j)
        CHECK(matrix.informs(0, j));
    CHECK_FALSE(matrix.informs(0, 0));
    CHECK(informers(matrix, 2) == std::vector<std::size_t>{1, 3});
    // irregular: row 1 reads particle 0, row 0 reads everyone
    CHECK(matrix.informs(1, 0));
    CHECK_FALSE(matrix.informs(1, 3));

    // with self flags set the diagonal joins each row
    std::vector<LocalSociometrySpec> with_self = homogeneous(5, RingTopology{1}, true);
    with_self[0].topology = GlobalTopology{};
    const auto matrix2 = assemble_connectivity(with_self);
    CHECK(informers(matrix2, 2) == std::vector<std::size_t>{1, 2, 3});
    CHECK(informers(matrix2, 4) == std::vector<std::size_t>{0, 3, 4});
}

TEST_CASE("assembly: ring is circulant and symmetric, forward is not symmetric")
{
    const auto ring = assemble_connectivity(homogeneous(5, RingTopology{1}, false));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(ring.informs(i, j) == ring.informs(j, i));
            // circulant: shifting both indices by one preserves the entry
            CHECK(ring.informs(i, j) == ring.informs((i + 1) % 5, (j + 1) % 5));
        }

    const auto fwd = assemble_connectivity(homogeneous(5, ForwardTopology{1}, false));
    bool symmetric = true;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            symmetric = symmetric && fwd.informs(i, j) == fwd.informs(j, i);
            CHECK(fwd.informs(i, j) == fwd.informs((i + 1) % 5, (j + 1) % 5));
        }
    CHECK_FALSE(symmetric);
}

TEST_CASE("assembly is deterministic")
{
    std::vector<LocalSociometrySpec> specs = homogeneous(6, RingTopology{2});
    specs[3].topology = WheelTopology{1};
    specs[3].include_self = false;
    CHECK(assemble_connectivity(specs) == assemble_connectivity(specs));
}

TEST_CASE("informers query honours the self flag")
{
    const auto with_self = assemble_connectivity(homogeneous(3, GlobalTopology{}, true));
    CHECK(informers(with_self, 1) == std::vector<std::size_t>{0, 1, 2});

    const auto no_self = assemble_connectivity(homogeneous(5, RingTopology{1}, false));
    CHECK(informers(no_self, 0) == std::vector<std::size_t>{1, 4});

    const auto wheel = assemble_connectivity(homogeneous(4, WheelTopology{0}, true));
    CHECK(informers(wheel, 2) == std::vector<std::size_t>{0, 2});

    CHECK_THROWS_AS(informers(wheel, 4), std::out_of_range);
}

TEST_CASE("no particle may end up without informers")
{
    CHECK_THROWS_AS(assemble_connectivity(homogeneous(1, GlobalTopology{}, false)),
                    std::invalid_argument);
    CHECK_NOTHROW(assemble_connectivity(homogeneous(1, GlobalTopology{}, true)));
}

TEST_CASE("connectivity CSV export marks self-inclusion")
{
    std::vector<LocalSociometrySpec> specs = homogeneous(3, RingTopology{1});
    specs[1].include_self = false;
    const auto matrix = assemble_connectivity(specs);
    std::ostringstream os;
    write_connectivity_csv(os, matrix);
    CHECK(os.str() == "X,1,1\n1,0,1\n1,1,X\n");
}
