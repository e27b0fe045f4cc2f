package plug;

public interface Extension {
    void run();
}
