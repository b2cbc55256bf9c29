#pragma once

#include "codecomp/action.hpp"
#include "codecomp/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace testing
{

using namespace codecomp;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine{ 20240611 };
    return engine;
}

inline std::size_t uniform( std::size_t lo, std::size_t hi )
{
    return std::uniform_int_distribution<std::size_t>{ lo, hi }( rng() );
}

// Uniform permutation of {1..n}.
inline NatPermutation random_finitary( Index n )
{
    std::vector<Index> images( n );
    std::iota( images.begin(), images.end(), Index{ 1 } );
    std::shuffle( images.begin(), images.end(), rng() );
    NatPermutation::Moves moves;
    for ( Index k = 1; k <= n; ++k )
        moves.emplace( k, images[ k - 1 ] );
    return NatPermutation::finitary( std::move( moves ) );
}

inline Transformation random_transformation( std::size_t n, bool bijective )
{
    Transformation t;
    t.images.resize( n );
    if ( bijective )
    {
        std::iota( t.images.begin(), t.images.end(), std::size_t{ 0 } );
        std::shuffle( t.images.begin(), t.images.end(), rng() );
    }
    else
        for ( auto& v : t.images )
            v = uniform( 0, n - 1 );
    return t;
}

inline DihedralElement random_dihedral( std::int64_t max_denominator )
{
    const auto d = static_cast<std::int64_t>( uniform( 1, static_cast<std::size_t>( max_denominator ) ) );
    const auto k = static_cast<std::int64_t>( uniform( 0, static_cast<std::size_t>( d - 1 ) ) );
    return { uniform( 0, 1 ) == 1, Rational{ k, d } };
}

inline FiniteSpace finite_space( std::size_t n )
{
    FiniteSpace f;
    for ( std::size_t i = 0; i < n; ++i )
        f.names.push_back( "p" + std::to_string( i ) );
    return f;
}

using Images = std::vector<std::size_t>;

// Monoid generated by the maps, identity included, as raw image vectors.
inline std::set<Images> monoid_closure( const std::vector<Transformation>& gens, std::size_t n )
{
    Images id( n );
    std::iota( id.begin(), id.end(), std::size_t{ 0 } );
    std::set<Images> seen{ id };
    std::vector<Images> frontier{ id };
    while ( !frontier.empty() )
    {
        std::vector<Images> next;
        for ( const auto& f : frontier )
            for ( const auto& g : gens )
            {
                Images h( n );
                for ( std::size_t i = 0; i < n; ++i )
                    h[ i ] = g.images[ f[ i ] ];
                if ( seen.insert( h ).second )
                    next.push_back( h );
            }
        frontier = std::move( next );
    }
    return seen;
}

struct RandomCandidate
{
    std::size_t points = 0;
    std::vector<std::set<Images>> parts;
    DecompositionCandidate candidate;
};

// Parts are monoids on at most 6 points. Some generators are powers of one
// shared permutation so that commuting parts turn up regularly.
inline RandomCandidate random_candidate( std::size_t max_points, std::size_t max_parts )
{
    const auto points = uniform( 2, max_points );
    std::vector<std::set<Images>> parts;
    const auto shared = random_transformation( points, true );
    std::vector<ActionFamily> families;
    std::vector<Element> everything;
    const auto count = uniform( 2, max_parts );
    while ( parts.size() < count )
    {
        std::vector<Transformation> gens;
        for ( std::size_t i = 0, k = uniform( 1, 2 ); i < k; ++i )
        {
            if ( uniform( 0, 2 ) == 0 )
            {
                auto g = Transformation::identity( points );
                for ( std::size_t e = uniform( 1, 3 ); e > 0; --e )
                    g = compose( g, shared );
                gens.push_back( g );
            }
            else
                gens.push_back( random_transformation( points, uniform( 0, 1 ) == 0 ) );
        }
        auto monoid = monoid_closure( gens, points );
        if ( std::find( parts.begin(), parts.end(), monoid ) != parts.end() )
            continue;
        std::vector<Element> elements;
        for ( const auto& images : monoid )
            elements.emplace_back( Transformation{ images } );
        everything.insert( everything.end(), elements.begin(), elements.end() );
        families.push_back( ActionFamily::enumerated( std::move( elements ) ) );
        parts.push_back( std::move( monoid ) );
    }
    DecompositionCandidate candidate{ finite_space( points ),
                                      ActionFamily::generated( std::move( everything ) ),
                                      std::move( families ),
                                      Budgets{},
                                      PartSchedule::none,
                                      Rational{ 1, 1000 },
                                      {} };
    return { points, std::move( parts ), std::move( candidate ) };
}

// x P_1 ... P_k as a set of points.
inline std::set<std::size_t> orbit_product( const std::vector<const std::set<Images>*>& order, std::size_t x )
{
    std::set<std::size_t> current{ x };
    for ( const auto* part : order )
    {
        std::set<std::size_t> next;
        for ( auto y : current )
            for ( const auto& s : *part )
                next.insert( s[ y ] );
        current = std::move( next );
    }
    return current;
}

// Pseudo-multi by brute force: every subset of at least two parts, every
// ordering of it, every point.
inline bool brute_force_pseudo_multi( const RandomCandidate& r )
{
    const auto n = r.parts.size();
    for ( std::size_t mask = 0; mask < ( std::size_t{ 1 } << n ); ++mask )
    {
        std::vector<std::size_t> chosen;
        for ( std::size_t i = 0; i < n; ++i )
            if ( mask & ( std::size_t{ 1 } << i ) )
                chosen.push_back( i );
        if ( chosen.size() < 2 )
            continue;
        for ( std::size_t x = 0; x < r.points; ++x )
        {
            std::optional<std::set<std::size_t>> reference;
            auto perm = chosen;
            do
            {
                std::vector<const std::set<Images>*> order;
                for ( auto i : perm )
                    order.push_back( &r.parts[ i ] );
                auto image = orbit_product( order, x );
                if ( !reference )
                    reference = std::move( image );
                else if ( image != *reference )
                    return false;
            } while ( std::next_permutation( perm.begin(), perm.end() ) );
        }
    }
    return true;
}

} // namespace testing
