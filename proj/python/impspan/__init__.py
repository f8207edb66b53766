"""Well-separated pair decompositions and imprecise t-spanners for disjoint balls."""

from ._impspan import (
    Ball,
    BallWspd,
    FindPairsStats,
    ImpreciseSpanner,
    all_pairs_dilation_oracle,
    ball_distance,
    bounding_box,
    build_imprecise_spanner,
    check_coverage,
    check_instance_separation,
    check_separation,
    compute_ball_wspd,
    compute_ball_wspd_with_stats,
    dilation,
    enclosing_ball,
    generate_clustered_balls,
    generate_disjoint_balls,
    generate_radial_segments,
    packing_bound,
    pairwise_disjoint,
    parse_ball_file,
    sample_instance,
    unit_ball_volume_coeff,
    verify_completeness_required,
    write_ball_file,
)

__all__ = [
    "Ball",
    "BallWspd",
    "FindPairsStats",
    "ImpreciseSpanner",
    "all_pairs_dilation_oracle",
    "ball_distance",
    "bounding_box",
    "build_imprecise_spanner",
    "check_coverage",
    "check_instance_separation",
    "check_separation",
    "compute_ball_wspd",
    "compute_ball_wspd_with_stats",
    "dilation",
    "enclosing_ball",
    "generate_clustered_balls",
    "generate_disjoint_balls",
    "generate_radial_segments",
    "packing_bound",
    "pairwise_disjoint",
    "parse_ball_file",
    "sample_instance",
    "unit_ball_volume_coeff",
    "verify_completeness_required",
    "write_ball_file",
]
