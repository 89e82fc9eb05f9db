//! Name-based controller construction for the command line, e.g.
//! `optimal:rule=passive,k=2`, `outerplanar`, `blowup-robber:k=2`.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, OuterplanarEmbedding, ProductStructure};
use crate::rules::MovementRule;
use crate::solver::cache::solve_cached;
use crate::strategy::{
    BlockEmbeddings, BlowupRobber, CopStrategy, DoublingCops, OddCycleProductCops, OptimalCop,
    OptimalRobber, OuterplanarCops, RobberStrategy, SamePartiteCops, ShadowPassiveCops,
    TreePairCop, TreeProductCops, TreeProductRobber,
};

/// Everything a named controller might need: the arena graph, the played
/// rule and cop count, and whatever structure the graph was built with.
pub struct ControllerContext {
    pub graph: Arc<Graph>,
    pub rule: MovementRule,
    pub cops: usize,
    pub cache_dir: Option<PathBuf>,
    pub embedding: Option<OuterplanarEmbedding>,
    pub product: Option<Arc<ProductStructure>>,
    /// (tree factors, t) when the graph is a blowup of a tree product
    pub blowup_trees_t: Option<(Vec<Graph>, usize)>,
    pub cycle_sizes: Option<Vec<usize>>,
}

impl ControllerContext {
    pub fn new(graph: Arc<Graph>, rule: MovementRule, cops: usize) -> ControllerContext {
        ControllerContext {
            graph,
            rule,
            cops,
            cache_dir: None,
            embedding: None,
            product: None,
            blowup_trees_t: None,
            cycle_sizes: None,
        }
    }
}

fn parse_name(spec: &str) -> Result<(&str, HashMap<&str, &str>)> {
    let (base, rest) = match spec.split_once(':') {
        Some((b, r)) => (b, Some(r)),
        None => (spec, None),
    };
    let mut params = HashMap::new();
    if let Some(rest) = rest {
        for pair in rest.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = pair.split_once('=').ok_or_else(|| {
                Error::Parse(format!("controller parameter {pair:?} is not key=value"))
            })?;
            params.insert(k.trim(), v.trim());
        }
    }
    Ok((base, params))
}

fn param_usize(params: &HashMap<&str, &str>, key: &str, default: usize) -> Result<usize> {
    match params.get(key) {
        None => Ok(default),
        Some(v) => v
            .parse()
            .map_err(|e| Error::Parse(format!("parameter {key}={v}: {e}"))),
    }
}

fn param_rule(params: &HashMap<&str, &str>, default: MovementRule) -> Result<MovementRule> {
    match params.get("rule") {
        None => Ok(default),
        Some(v) => MovementRule::parse(v)
            .ok_or_else(|| Error::Parse(format!("unknown rule {v:?} (passive, fully-active, active, lazy)"))),
    }
}

fn optimal_cop(ctx: &ControllerContext, rule: MovementRule, k: usize) -> Result<OptimalCop> {
    let table = solve_cached(ctx.cache_dir.as_deref(), &ctx.graph, k, rule)?;
    OptimalCop::new(ctx.graph.clone(), Arc::new(table))
}

fn need_product(ctx: &ControllerContext, who: &str) -> Result<Arc<ProductStructure>> {
    ctx.product.clone().ok_or_else(|| {
        Error::parameter(format!(
            "{who} needs a graph built as a Cartesian product (use a product expression)"
        ))
    })
}

pub fn build_cop_controller(spec: &str, ctx: &ControllerContext) -> Result<Box<dyn CopStrategy>> {
    let (base, params) = parse_name(spec)?;
    match base {
        "optimal" => {
            let rule = param_rule(&params, ctx.rule)?;
            let k = param_usize(&params, "k", ctx.cops)?;
            Ok(Box::new(optimal_cop(ctx, rule, k)?))
        }
        "outerplanar" => {
            let be = match &ctx.embedding {
                Some(emb) => BlockEmbeddings::new(&ctx.graph, std::slice::from_ref(emb))?,
                None => BlockEmbeddings::new(&ctx.graph, &[])?,
            };
            Ok(Box::new(OuterplanarCops::new(
                ctx.graph.clone(),
                Arc::new(be),
            )?))
        }
        "doubling" => {
            let k = param_usize(&params, "k", ctx.cops.div_euclid(2).max(1))?;
            let inner = optimal_cop(ctx, MovementRule::PASSIVE, k)?;
            Ok(Box::new(DoublingCops::new(ctx.graph.clone(), Box::new(inner))))
        }
        "shadow-passive" => {
            let t = param_usize(&params, "k", ctx.cops.saturating_sub(1).max(1))?;
            let inner = optimal_cop(ctx, MovementRule::FULLY_ACTIVE, t)?;
            Ok(Box::new(ShadowPassiveCops::new(
                ctx.graph.clone(),
                Box::new(inner),
            )))
        }
        "same-partite" => {
            let k = param_usize(&params, "k", ctx.cops)?;
            let inner = optimal_cop(ctx, MovementRule::PASSIVE, k)?;
            Ok(Box::new(SamePartiteCops::new(
                ctx.graph.clone(),
                Box::new(inner),
            )?))
        }
        "tree-pair" => Ok(Box::new(TreePairCop::new(need_product(ctx, "tree-pair")?)?)),
        "tree-product" => Ok(Box::new(TreeProductCops::new(need_product(
            ctx,
            "tree-product",
        )?)?)),
        "odd-cycle" => {
            let sizes = ctx.cycle_sizes.clone().ok_or_else(|| {
                Error::parameter("odd-cycle needs a graph built as a product of cycles")
            })?;
            Ok(Box::new(OddCycleProductCops::new(
                &sizes,
                ctx.cache_dir.as_deref(),
            )?))
        }
        other => Err(Error::Parse(format!(
            "unknown cop controller {other:?}; {}",
            registry_help()
        ))),
    }
}

pub fn build_robber_controller(
    spec: &str,
    ctx: &ControllerContext,
) -> Result<Box<dyn RobberStrategy>> {
    let (base, params) = parse_name(spec)?;
    match base {
        "optimal" => {
            let rule = param_rule(&params, ctx.rule)?;
            let k = param_usize(&params, "k", ctx.cops)?;
            let table = solve_cached(ctx.cache_dir.as_deref(), &ctx.graph, k, rule)?;
            Ok(Box::new(OptimalRobber::new(
                ctx.graph.clone(),
                Arc::new(table),
            )?))
        }
        "blowup-robber" => {
            let (trees, t) = ctx.blowup_trees_t.clone().ok_or_else(|| {
                Error::parameter(
                    "blowup-robber needs a graph built as a blowup of a tree product",
                )
            })?;
            let k = param_usize(&params, "k", (trees.len() + 1) / 2)?;
            let robber = BlowupRobber::new(&trees, t, k)?;
            if robber.graph().adjacency_hash() != ctx.graph.adjacency_hash() {
                return Err(Error::parameter(
                    "blowup-robber structure does not match the arena graph",
                ));
            }
            Ok(Box::new(robber))
        }
        "tree-product-robber" => Ok(Box::new(TreeProductRobber::new(need_product(
            ctx,
            "tree-product-robber",
        )?)?)),
        other => Err(Error::Parse(format!(
            "unknown robber controller {other:?}; {}",
            registry_help()
        ))),
    }
}

pub fn registry_help() -> String {
    "cop controllers: optimal[:rule=R,k=K], outerplanar, doubling[:k=K], \
     shadow-passive[:k=K], same-partite[:k=K], tree-pair, tree-product, odd-cycle; \
     robber controllers: optimal[:rule=R,k=K], blowup-robber[:k=K], tree-product-robber"
        .to_string()
}
