package fs;

import java.io.File;

public class Walker {
    public void noop() {
    }

    public File probe() {
        File f = null;
        return f;
    }
}
