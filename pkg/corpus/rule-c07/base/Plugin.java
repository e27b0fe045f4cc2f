package plug;

public interface Plugin {
    void run();
}
