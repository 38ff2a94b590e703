import time, numpy as np
from graphpose.harness import RunConfig, train, evaluate
from graphpose.scene import read_dataset

ds = read_dataset("default2k.vtds")
for variant in ("full", "nohrch"):
    cfg = RunConfig(dataset="default2k.vtds", out_dir=f"probe_{variant}",
                    variant=variant, seed=1, epochs=2, batch_size=8)
    t0 = time.perf_counter()
    ck = train(cfg, dataset=ds, quiet=True)
    t1 = time.perf_counter()
    rep = evaluate(ck, cfg, dataset=ds)
    t2 = time.perf_counter()
    print(f"{variant}: train {t1-t0:.0f}s eval {t2-t1:.0f}s "
          f"pos={rep.pos_mean:.3f}+-{rep.pos_se:.3f}cm ang={rep.ang_mean:.2f}+-{rep.ang_se:.2f}deg",
          flush=True)
