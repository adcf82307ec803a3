from chevlab.cli import main

raise SystemExit(main())
