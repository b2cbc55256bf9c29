#include "codecomp/scenarios.hpp"

#include <set>
#include <stdexcept>

namespace codecomp
{

std::optional<ActionFamily> build_T_n( std::uint64_t n, const Budgets& budgets )
{
    if ( n == 0 )
        throw std::invalid_argument( "T_n needs n >= 1" );
    std::uint64_t size = 1;
    for ( std::uint64_t i = 2; i <= n; ++i )
    {
        size *= i;
        if ( size > budgets.closure )
            return std::nullopt;
    }
    std::vector<Element> elements;
    for ( auto& p : all_permutations_of( n ) )
        elements.emplace_back( std::move( p ) );
    return ActionFamily::enumerated( std::move( elements ) );
}

NatPermutation build_shift_sigma()
{
    return shift_sigma();
}

MConstruction build_M_construction( const std::vector<Element>& s )
{
    std::vector<Element> distinct;
    {
        std::set<Element> seen;
        for ( const auto& g : s )
            if ( seen.insert( g ).second )
                distinct.push_back( g );
    }
    if ( distinct.size() < 2 )
        throw std::invalid_argument( "the construction needs a nontrivial S (at least two elements)" );

    std::vector<Element> monoid{ AdjoinedIdentity{} };
    for ( const auto& a : distinct )
        for ( const auto& b : distinct )
            monoid.emplace_back( PairElement::make( a, b ) );

    std::vector<ActionFamily> parts;
    for ( const auto& t : distinct )
    {
        std::vector<Element> part{ AdjoinedIdentity{} };
        for ( const auto& a : distinct )
            part.emplace_back( PairElement::make( a, t ) );
        parts.push_back( ActionFamily::enumerated( std::move( part ) ) );
    }
    return { ActionFamily::enumerated( std::move( monoid ) ), std::move( parts ) };
}

} // namespace codecomp
