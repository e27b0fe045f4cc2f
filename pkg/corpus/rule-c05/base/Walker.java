package fs;

import java.io.File;

public class Walker {
    public void noop() {
    }
}
