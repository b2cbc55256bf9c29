// Acceptance gate: one PASS/FAIL line per criterion; exits 1 if any fails.

#include "support.hpp"

#include "codecomp/report.hpp"
#include "codecomp/scenarios.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

using namespace codecomp;
using namespace testing;

namespace
{

struct Result
{
    bool ok = true;
    std::ostringstream notes;

    void expect( bool condition, const std::string& what )
    {
        if ( condition )
            return;
        if ( ok )
            notes << what;
        else
            notes << "; " << what;
        ok = false;
    }
};

BPoint bp( Index k ) { return BPoint::recip( k ); }

std::set<Element> elements_of( const ActionFamily& f )
{
    const auto en = enumerate( f, {} );
    return { en.elements.begin(), en.elements.end() };
}

std::set<Element> product( const std::set<Element>& a, const std::set<Element>& b )
{
    std::set<Element> out;
    for ( const auto& s : a )
        for ( const auto& t : b )
            out.insert( compose( s, t ) );
    return out;
}

DecompositionCandidate candidate( Space space, ActionFamily base, std::vector<ActionFamily> parts,
                                  PartSchedule schedule = PartSchedule::none )
{
    return { std::move( space ), std::move( base ), std::move( parts ), Budgets{}, schedule, Rational{ 1, 1000 }, {} };
}

// ----------------------------------------------------------------------------

void non_commutation( Result& r )
{
    const Element s = NatPermutation::cycle( { 1, 2 } );
    const Element m = NatPermutation::cycle( { 1, 3 } );
    const Point one = bp( 1 );
    r.expect( codecomp::apply( compose( s, m ), one ) == Point{ bp( 2 ) }, "1 f_s f_m != 1/2" );
    r.expect( codecomp::apply( compose( m, s ), one ) == Point{ bp( 3 ) }, "1 f_m f_s != 1/3" );

    std::vector<ActionFamily> parts;
    for ( std::uint64_t n = 1; n <= 3; ++n )
        parts.push_back( ActionFamily::T_n( n ) );
    const auto v = check_multi( candidate( BSpace{}, ActionFamily::T_n( 3 ), parts ) );
    r.expect( v.is_fails(), "check_multi did not fail" );
    if ( v.is_fails() )
    {
        const auto& w = v.witness();
        r.expect( w.elements.size() == 2 && w.elements[ 0 ] == s && w.elements[ 1 ] == m, "witness elements differ" );
        r.expect( w.points.size() == 3 && w.points[ 0 ] == one && w.points[ 1 ] == Point{ bp( 2 ) }
                      && w.points[ 2 ] == Point{ bp( 3 ) },
                  "witness points differ" );
    }
}

void pseudo_and_strong( Result& r )
{
    std::vector<ActionFamily> parts;
    for ( std::uint64_t n = 1; n <= 4; ++n )
        parts.push_back( ActionFamily::T_n( n ) );
    const auto c = candidate( BSpace{}, ActionFamily::T_n( 4 ), parts );
    r.expect( check_pseudo_multi( c ).is_holds(), "pseudo_multi not Holds" );
    r.expect( check_strong_pseudo( c ).is_holds(), "strong_pseudo not Holds" );
    r.expect( elements_of( ActionFamily::T_n( 4 ) ).size() == 24, "|T_4| != 24" );
    for ( std::uint64_t n = 1; n <= 4; ++n )
        for ( std::uint64_t m = 1; m <= 4; ++m )
            r.expect( product( elements_of( ActionFamily::T_n( n ) ), elements_of( ActionFamily::T_n( m ) ) )
                          == elements_of( ActionFamily::T_n( std::max( n, m ) ) ),
                      "T_" + std::to_string( n ) + " T_" + std::to_string( m ) + " != T_max" );
}

// Restriction of finitary permutations to {1..n}, indexed from 0. The point 0
// of B is fixed by everything and is left out.
std::vector<Transformation> restrict_to( const std::vector<NatPermutation>& gens, Index n )
{
    std::vector<Transformation> out;
    for ( const auto& p : gens )
    {
        Transformation t;
        for ( Index k = 1; k <= n; ++k )
            t.images.push_back( p.apply( k ) - 1 );
        out.push_back( std::move( t ) );
    }
    return out;
}

void distality( Result& r )
{
    for ( std::uint64_t n = 1; n <= 6; ++n )
        r.expect( is_distal( BSpace{}, ActionFamily::T_n( n ), {} ).is_holds(),
                  "T_" + std::to_string( n ) + " not distal" );

    int agree = 0;
    for ( int trial = 0; trial < 50; ++trial )
    {
        std::vector<NatPermutation> gens;
        std::vector<Element> elements;
        Index bound = 1;
        for ( std::size_t i = 0, count = uniform( 1, 3 ); i < count; ++i )
        {
            gens.push_back( random_finitary( uniform( 2, 7 ) ) );
            elements.emplace_back( gens.back() );
            bound = std::max( bound, gens.back().max_support() );
        }
        const auto verdict = is_distal( BSpace{}, ActionFamily::generated( elements ), {} );

        std::set<IndexPair> diagonal;
        for ( std::size_t x = 0; x < bound; ++x )
            diagonal.emplace( x, x );
        std::set<IndexPair> oracle;
        for ( const auto& s : monoid_closure( restrict_to( gens, bound ), bound ) )
            for ( std::size_t x = 0; x < bound; ++x )
                for ( std::size_t y = 0; y < bound; ++y )
                    if ( s[ x ] == s[ y ] )
                        oracle.emplace( x, y );
        const bool oracle_distal = oracle == diagonal;
        if ( !verdict.is_undecided() && verdict.is_holds() == oracle_distal )
            ++agree;
    }
    r.expect( agree == 50, std::to_string( agree ) + "/50 random families agree" );
}

void non_distality( Result& r )
{
    for ( std::uint64_t n = 2; n <= 8; ++n )
    {
        const auto o = orbit( BSpace{}, ActionFamily::T_n( n ), bp( 1 ), 1000 );
        r.expect( o.complete && o.points.size() == n, "orbit of 1 under T_" + std::to_string( n ) + " has wrong size" );
    }
    const auto shift = ActionFamily::generated( { Element{ build_shift_sigma() } } );
    const auto o = orbit( BSpace{}, shift, bp( 1 ), 10 );
    r.expect( o.points.size() >= 10, "shift orbit shorter than 10" );
    for ( std::size_t k = 0; k < 10 && k < o.points.size(); ++k )
        r.expect( o.points[ k ] == Point{ bp( 2 * k + 1 ) }, "shift orbit entry " + std::to_string( k ) );

    const Rational eps{ 1, 100 };
    for ( const auto& [ name, family ] : { std::pair{ "T", ActionFamily::T() }, std::pair{ "shift", shift } } )
    {
        const auto v = proximal_witness_to_zero( family, bp( 1 ), eps, {} );
        bool below = false;
        if ( v.is_holds() && !v.witness().points.empty() )
            below = std::get<BPoint>( v.witness().points.back() ).index() > 100;
        r.expect( below, std::string{ "no witness below 1/100 for " } + name );
    }
}

void dihedral_algebra( Result& r )
{
    std::set<DihedralElement> all;
    for ( std::int64_t d = 1; d <= 12; ++d )
        for ( std::int64_t k = 0; k < d; ++k )
            for ( bool flip : { false, true } )
                all.insert( DihedralElement{ flip, Rational{ k, d } } );

    const auto eta = DihedralElement::eta();
    const auto half = DihedralElement::phi( Rational{ 1, 2 } );
    std::set<DihedralElement> involutions;
    std::set<DihedralElement> centralizer;
    for ( const auto& g : all )
    {
        if ( !g.flip() )
        {
            const auto a = g.angle();
            r.expect( dihedral_compose( eta, DihedralElement::phi( a ) ) == DihedralElement::eps( a )
                          && dihedral_compose( DihedralElement::phi( -a ), eta ) == DihedralElement::eps( a ),
                      "eta phi identity at " + to_string( a ) );
        }
        if ( dihedral_compose( g, g ).is_identity() )
            involutions.insert( g );
        if ( dihedral_compose( g, eta ) == dihedral_compose( eta, g ) )
            centralizer.insert( g );

        const auto n = dihedral_order( g );
        r.expect( dihedral_power( g, static_cast<std::int64_t>( n ) ).is_identity(), "g^order != id" );
        for ( std::uint64_t k = 1; k < n; ++k )
            if ( dihedral_power( g, static_cast<std::int64_t>( k ) ).is_identity() )
                r.expect( false, "order of " + to_string( g ) + " not minimal" );
    }

    std::set<DihedralElement> expected_involutions{ DihedralElement::identity(), half };
    for ( const auto& g : all )
        if ( g.flip() )
            expected_involutions.insert( g );
    r.expect( involutions == expected_involutions, "involution set differs" );
    r.expect( centralizer
                  == std::set<DihedralElement>{ eta, DihedralElement::identity(), half,
                                                DihedralElement::eps( Rational{ 1, 2 } ) },
              "centralizer of eta differs" );
}

void circle_products( Result& r )
{
    for ( std::uint64_t s = 1; s <= 12; ++s )
        for ( std::uint64_t t = 1; t <= 12; ++t )
        {
            const auto a = elements_of( ActionFamily::DihedralT( s ) );
            const auto b = elements_of( ActionFamily::DihedralT( t ) );
            const auto l = elements_of( ActionFamily::DihedralT( std::lcm( s, t ) ) );
            r.expect( product( a, b ) == l && product( b, a ) == l,
                      "T_" + std::to_string( s ) + " T_" + std::to_string( t ) );
        }
    std::vector<ActionFamily> parts;
    for ( std::uint64_t m : { 2, 3, 4, 5 } )
        parts.push_back( ActionFamily::DihedralT( m ) );
    r.expect( check_pseudo_multi( candidate( CircleRationalSpace{}, ActionFamily::SigmaStar(), parts ) ).is_holds(),
              "pseudo_multi on dihedral parts not Holds" );
}

void transitivity_and_minimality( Result& r )
{
    for ( std::uint64_t m = 1; m <= 10; ++m )
    {
        const Rational eps{ 1, static_cast<std::int64_t>( 4 * m ) };
        const auto v = is_point_transitive( CircleRationalSpace{}, ActionFamily::DihedralT( m ), eps, {}, {} );
        const bool arc = v.is_fails() && v.witness().points.size() == 3;
        r.expect( arc && v.exact(), "DihedralT(" + std::to_string( m ) + ") missing arc witness" );
    }
    for ( const auto& family : { ActionFamily::Sigma(), ActionFamily::SigmaStar() } )
        for ( std::int64_t d : { 10, 100, 1000 } )
        {
            const auto v = is_minimal( CircleRationalSpace{}, family, Rational{ 1, d }, {}, {} );
            bool witnessed = false;
            if ( v.is_holds() && v.resolution() == Rational{ 1, d } && !v.witness().elements.empty() )
                witnessed = std::get<DihedralElement>( v.witness().elements[ 0 ] ).angle().denominator() > d;
            r.expect( witnessed, family.label() + " at 1/" + std::to_string( d ) );
        }

    std::vector<ActionFamily> parts;
    for ( std::int64_t m : { 2, 3, 4, 5 } )
        parts.push_back( ActionFamily::CyclicRotation( Rational{ 1, m } ) );
    const auto report = classify( candidate( CircleRationalSpace{}, ActionFamily::Sigma(), parts,
                                             PartSchedule::all_cyclic_rotations ),
                                  TargetProperty::non_minimal );
    r.expect( report.multi.is_holds(), "rotation candidate not multi" );
    bool every = report.property_per_part.size() == parts.size();
    for ( const auto& p : report.property_per_part )
        every = every && p.verdict.is_holds();
    r.expect( every, "a rotation part is not non-minimal" );
}

void m_construction( Result& r )
{
    const Transformation id{ { 0, 1 } };
    const Transformation swap{ { 1, 0 } };
    const auto m = build_M_construction( { Element{ id }, Element{ swap } } );
    r.expect( elements_of( m.monoid ).size() == 5, "|M| != 5" );
    const auto c = DecompositionCandidate{ finite_space( 2 ), m.monoid, m.parts, Budgets{}, PartSchedule::none,
                                           Rational{ 1, 1000 }, {} };
    const auto report = classify( c, TargetProperty::none );
    r.expect( report.pseudo_multi.is_holds(), "pseudo_multi not Holds" );
    if ( report.strong_pseudo.is_fails() )
        r.expect( !report.strong_pseudo.witness().element_sets.empty(), "strong_pseudo witness lacks product sets" );
    else
        r.expect( false, "strong_pseudo is " + label( report.strong_pseudo )
                             + ": with the adjoined identity in every part, P_t P_u = P_u P_t" );
    r.expect( acts_effectively( c.space, m.monoid, {} ).is_fails(), "acts_effectively(M) not Fails" );
}

void transposition_lemma( Result& r )
{
    int agree = 0;
    for ( int trial = 0; trial < 100; ++trial )
    {
        const auto rc = random_candidate( 6, 4 );
        const auto v = check_pseudo_multi( rc.candidate );
        if ( !v.is_undecided() && v.is_holds() == brute_force_pseudo_multi( rc ) )
            ++agree;
    }
    r.expect( agree == 100, std::to_string( agree ) + "/100 candidates agree" );
}

void full_reproduction( Result& r )
{
    const std::string command = std::string{ "\"" } + CODECOMP_CLI + "\" reproduce > /dev/null 2>&1";
    const int status = std::system( command.c_str() );
    const int code = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
    const auto reports = reproduce_all();
    std::set<std::string> anchors;
    std::string failing;
    for ( const auto& s : reports )
    {
        anchors.insert( s.anchor );
        if ( !s.pass )
            failing += ( failing.empty() ? "" : ", " ) + s.id;
    }
    bool covered = true;
    for ( const auto& a : required_anchors() )
        covered = covered && anchors.contains( a );
    r.expect( reports.size() >= 20, "fewer than 20 scenarios" );
    r.expect( covered, "an anchor has no scenario" );
    r.expect( code == 0, "reproduce exit code " + std::to_string( code )
                             + ( failing.empty() ? "" : " (failing: " + failing + ")" ) );
}

struct Criterion
{
    int number;
    std::string name;
    double limit_s;
    std::function<void( Result& )> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        { 1, "non-commutation witness", 1.0, non_commutation },
        { 2, "pseudo-multi and strong pseudo on T_n", 1.0, pseudo_and_strong },
        { 3, "distality suite", 5.0, distality },
        { 4, "non-distality signatures", 1.0, non_distality },
        { 5, "dihedral algebra", 2.0, dihedral_algebra },
        { 6, "circle products", 2.0, circle_products },
        { 7, "point transitivity and minimality", 2.0, transitivity_and_minimality },
        { 8, "M construction", 1.0, m_construction },
        { 9, "transposition lemma", 10.0, transposition_lemma },
        { 10, "full reproduction suite", 30.0, full_reproduction },
    };

    int failed = 0;
    for ( const auto& c : criteria )
    {
        Result r;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            c.run( r );
        }
        catch ( const std::exception& e )
        {
            r.expect( false, std::string{ "exception: " } + e.what() );
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        r.expect( elapsed.count() < c.limit_s, "over the " + std::to_string( c.limit_s ) + " s limit" );

        std::cout << ( r.ok ? "PASS" : "FAIL" ) << " criterion " << c.number << ": " << c.name << " ("
                  << static_cast<long>( elapsed.count() * 1000 ) << " ms)";
        if ( !r.ok )
            std::cout << " -- " << r.notes.str();
        std::cout << "\n";
        failed += r.ok ? 0 : 1;
    }
    std::cout << ( criteria.size() - failed ) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
